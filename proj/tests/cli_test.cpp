// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cpm_cli.hpp"
#include "test_support.hpp"

namespace cpm {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cpm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cpm_cli_test_" + name);
  write_file(path, content);
  return path;
}

TEST(Cli, WitnessLine) {
  const auto r = run({"--text", "aaccbbxbaaab", "--pattern", "aabbbb", "-k", "1", "--witness"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4\t2\t1\n"), std::string::npos);
}

TEST(Cli, SingleExactMatch) {
  const auto r = run({"-k", "0", "--pattern", "X", "--text", "X"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, JsonAgreesWithText) {
  testing::Rng rng(81);
  for (int it = 0; it < 40; ++it) {
    std::string p;
    std::string t;
    for (index_t i = testing::uniform(rng, 1, 8); i > 0; --i) p += static_cast<char>('a' + testing::uniform(rng, 0, 2));
    for (index_t i = testing::uniform(rng, 1, 40); i > 0; --i) t += static_cast<char>('a' + testing::uniform(rng, 0, 2));
    const std::string k = std::to_string(testing::uniform(rng, 0, 2));
    const auto text = run({"-p", p, "-t", t, "-k", k});
    const auto json = run({"-p", p, "-t", t, "-k", k, "--format", "json", "--witness"});
    ASSERT_EQ(text.code, 0);
    ASSERT_EQ(json.code, 0);
    const auto doc = nlohmann::json::parse(json.out);
    std::string lines;
    for (const auto& v : doc["positions"]) lines += std::to_string(v.get<index_t>()) + "\n";
    ASSERT_EQ(lines, text.out);
    ASSERT_EQ(doc["witnesses"].size(), doc["positions"].size());
    ASSERT_TRUE(doc.contains("parameters"));
    ASSERT_TRUE(doc.contains("timing_ms"));
  }
}

TEST(Cli, AlgorithmsProduceIdenticalOutput) {
  const std::vector<std::string> base{"-p", "abaababa", "-t", "bbaabaaaabaaaabbababbababbaabaab", "-k", "2"};
  std::string first;
  for (const char* a : {"naive", "anchor", "sample", "auto"}) {
    auto args = base;
    args.insert(args.end(), {"--algorithm", a, "--witness"});
    const auto r = run(args);
    ASSERT_EQ(r.code, 0);
    if (first.empty()) first = r.out;
    EXPECT_EQ(r.out, first) << a;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"-p", "ab", "-t", "abab", "-k", "x"}).code, 1);
  EXPECT_EQ(run({"-p", "ab", "-t", "abab", "-k", "-1"}).code, 1);
  EXPECT_EQ(run({"-p", "ab", "-k", "0"}).code, 1);
  EXPECT_EQ(run({"-p", "ab", "-P", "f", "-t", "ab"}).code, 1);
  EXPECT_EQ(run({"-p", "", "-t", "ab"}).code, 1);
  EXPECT_EQ(run({"--bogus"}).code, 1);
  const auto missing = run({"-P", "/nonexistent/cpm/pattern", "-t", "abc"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FastaFiles) {
  const auto pattern = temp_file("p.fa", ">p\nac\n");
  const auto text = temp_file("t.fa", ">chr1 first\nttca\n>chr2\ngt\n");
  const auto r = run({"-P", pattern.string(), "-T", text.string(), "--fasta"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Ingest, RawAndFasta) {
  EXPECT_EQ(parse_raw("abc\n").size(), 3);
  EXPECT_EQ(parse_raw("abc\r\n").size(), 3);
  EXPECT_EQ(parse_fasta(">h1\nac\ngt\n>h2\nnn\n").to_string(), "ACGTNN");
  EXPECT_THROW((void)ingest_file("/nonexistent/cpm", false), io_error);
}

TEST(Ingest, RoundTrip) {
  testing::Rng rng(82);
  for (int it = 0; it < 50; ++it) {
    std::string s;
    for (index_t i = testing::uniform(rng, 1, 100); i > 0; --i) s += static_cast<char>('A' + testing::uniform(rng, 0, 25));
    const auto path = temp_file("roundtrip", "");
    write_sequence(path, Sequence::from_bytes(s));
    ASSERT_EQ(ingest_file(path, false), Sequence::from_bytes(s));
  }
}

TEST(Cli, BenchCsv) {
  const auto r = run({"bench", "-n", "256", "-m", "16", "-k", "0", "2", "--reps", "1"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,m,k,algorithm,median_ms");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 6);
}

}  // namespace
}  // namespace cpm
