// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_TOOLS_CPM_CLI_HPP
#define CPM_TOOLS_CPM_CLI_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpm/benchmark.hpp"
#include "cpm/io.hpp"
#include "cpm/solver.hpp"

namespace cpm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

struct CliConfig {
  std::optional<std::string> pattern;
  std::optional<std::string> pattern_file;
  std::optional<std::string> text;
  std::optional<std::string> text_file;
  std::int64_t k = 0;
  std::string algorithm = "auto";
  std::string format = "text";
  bool witness = false;
  bool fasta = false;
  bool parallel = false;
};

struct BenchConfig {
  std::vector<std::int64_t> n{1 << 16, 1 << 17, 1 << 18};
  std::vector<std::int64_t> m{1 << 10};
  std::vector<std::int64_t> k{0, 2, 4, 8};
  std::vector<std::string> algorithms{"naive", "anchor", "sample"};
  std::string input = "random";
  int reps = 5;
  std::uint64_t seed = 1;
};

namespace detail {

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Sequence load(const std::optional<std::string>& literal, const std::optional<std::string>& file,
                     bool fasta, const char* what) {
  if (literal.has_value() == file.has_value()) {
    throw usage_error(std::string("exactly one ") + what + " source is required");
  }
  Sequence s = file ? ingest_file(*file, fasta) : ingest(*literal, fasta);
  if (s.empty()) throw usage_error(std::string(what) + " is empty");
  return s;
}

inline int search(const CliConfig& cfg, std::ostream& out) {
  const auto algorithm = parse_algorithm(cfg.algorithm);
  if (!algorithm) throw usage_error("unknown algorithm '" + cfg.algorithm + "'");
  if (cfg.k < 0) throw usage_error("k must be non-negative");
  const Sequence pattern = load(cfg.pattern, cfg.pattern_file, cfg.fasta, "pattern");
  const Sequence text = load(cfg.text, cfg.text_file, cfg.fasta, "text");

  SolverConfig solver;
  solver.algorithm = *algorithm;
  solver.want_witness = cfg.witness;
  solver.parallel_windows = cfg.parallel;
  const auto start = std::chrono::steady_clock::now();
  const OccurrenceReport report = solve(text, pattern, cfg.k, solver);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (cfg.format == "json") {
    nlohmann::json doc;
    doc["positions"] = report.positions();
    if (cfg.witness) {
      auto witnesses = nlohmann::json::array();
      for (const auto& occ : report.occurrences) {
        witnesses.push_back({{"pos", occ.position}, {"rot", occ.rotation->value()}, {"dist", *occ.mismatches}});
      }
      doc["witnesses"] = witnesses;
    }
    doc["parameters"] = {{"n", text.size()},
                         {"m", pattern.size()},
                         {"k", cfg.k},
                         {"algorithm", std::string(to_string(*algorithm))},
                         {"fasta", cfg.fasta},
                         {"witness", cfg.witness}};
    doc["timing_ms"] = ms;
    out << doc.dump() << '\n';
    return kExitOk;
  }
  for (const auto& occ : report.occurrences) {
    out << occ.position;
    if (cfg.witness) out << '\t' << occ.rotation->value() << '\t' << *occ.mismatches;
    out << '\n';
  }
  return kExitOk;
}

inline int benchmark(const BenchConfig& cfg, std::ostream& out) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : cfg.algorithms) {
    const auto a = parse_algorithm(name);
    if (!a) throw usage_error("unknown algorithm '" + name + "'");
    algorithms.push_back(*a);
  }
  if (cfg.input != "random" && cfg.input != "periodic") throw usage_error("input must be random or periodic");
  const auto kind = cfg.input == "random" ? bench::InputKind::random : bench::InputKind::periodic;
  bench::write_csv_header(out);
  for (auto n : cfg.n) {
    for (auto m : cfg.m) {
      if (m < 1 || n < 1) throw usage_error("n and m must be positive");
      for (auto k : cfg.k) {
        if (k < 0) throw usage_error("k must be non-negative");
        const auto inst = bench::make_instance(kind, n, m, k, cfg.seed);
        for (auto a : algorithms) bench::write_csv_row(out, bench::time_solver(inst, k, a, cfg.reps));
        out.flush();
      }
    }
  }
  return kExitOk;
}

}  // namespace detail

/// Parses argv and runs a search or the benchmark. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular pattern matching with k mismatches. Positions are 0-based."};
  app.set_version_flag("--version", "cpm 1.0.0");
  CliConfig cfg;
  app.add_option("-p,--pattern", cfg.pattern, "Pattern given literally");
  app.add_option("-P,--pattern-file", cfg.pattern_file, "Read the pattern from a file");
  app.add_option("-t,--text", cfg.text, "Text given literally");
  app.add_option("-T,--text-file", cfg.text_file, "Read the text from a file");
  app.add_option("-k,--mismatches", cfg.k, "Maximum Hamming distance (default 0)");
  app.add_option("-a,--algorithm", cfg.algorithm, "naive | anchor | sample | auto")
      ->check(CLI::IsMember({"naive", "anchor", "sample", "auto"}));
  app.add_option("-f,--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-w,--witness", cfg.witness, "Report a rotation and its mismatch count per position");
  app.add_flag("--fasta", cfg.fasta, "Parse inputs as FASTA (headers skipped, residues uppercased)");
  app.add_flag("--parallel", cfg.parallel, "Process text windows on several threads");

  BenchConfig bench_cfg;
  CLI::App* bench = app.add_subcommand("bench", "Time the algorithms and print CSV");
  bench->add_option("-n", bench_cfg.n, "Text lengths");
  bench->add_option("-m", bench_cfg.m, "Pattern lengths");
  bench->add_option("-k", bench_cfg.k, "Mismatch bounds");
  bench->add_option("-a,--algorithms", bench_cfg.algorithms, "Algorithms to time");
  bench->add_option("--input", bench_cfg.input, "random | periodic");
  bench->add_option("--reps", bench_cfg.reps, "Repetitions per cell (median reported)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_cfg.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (bench->parsed()) return detail::benchmark(bench_cfg, out);
    return detail::search(cfg, out);
  } catch (const detail::usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace cpm::cli

#endif  // CPM_TOOLS_CPM_CLI_HPP
