// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_BENCHMARK_HPP
#define CPM_BENCHMARK_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cpm/solver.hpp"

namespace cpm::bench {

enum class InputKind { random, periodic };

/// Uniform letters over [0, sigma).
inline Sequence random_sequence(index_t length, symbol_t sigma, std::mt19937_64& rng) {
  std::uniform_int_distribution<symbol_t> letter(0, sigma - 1);
  std::vector<symbol_t> s(static_cast<std::size_t>(length));
  for (auto& c : s) c = letter(rng);
  return Sequence(std::move(s), sigma);
}

/// A random block of length `period` repeated, with `noise` random substitutions.
inline Sequence periodic_sequence(index_t length, index_t period, index_t noise, symbol_t sigma,
                                  std::mt19937_64& rng) {
  const Sequence block = random_sequence(std::max<index_t>(period, 1), sigma, rng);
  std::vector<symbol_t> s(static_cast<std::size_t>(length));
  for (index_t i = 0; i < length; ++i) s[static_cast<std::size_t>(i)] = block[i % block.size()];
  if (length > 0) {
    std::uniform_int_distribution<index_t> where(0, length - 1);
    std::uniform_int_distribution<symbol_t> letter(0, sigma - 1);
    for (index_t t = 0; t < noise; ++t) s[static_cast<std::size_t>(where(rng))] = letter(rng);
  }
  return Sequence(std::move(s), sigma);
}

struct Instance {
  Sequence text;
  Sequence pattern;
};

/// Periodic inputs share one block so that sample runs and chains are exercised.
inline Instance make_instance(InputKind kind, index_t n, index_t m, index_t k, std::uint64_t seed,
                              symbol_t sigma = 4) {
  std::mt19937_64 rng(seed);
  if (kind == InputKind::random) {
    Sequence text = random_sequence(n, sigma, rng);
    Sequence pattern = random_sequence(m, sigma, rng);
    return {std::move(text), std::move(pattern)};
  }
  const index_t period = 3;
  const Sequence block = random_sequence(period, sigma, rng);
  std::vector<symbol_t> t(static_cast<std::size_t>(n));
  std::vector<symbol_t> p(static_cast<std::size_t>(m));
  for (index_t i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = block[i % period];
  for (index_t i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = block[i % period];
  std::uniform_int_distribution<symbol_t> letter(0, sigma - 1);
  std::uniform_int_distribution<index_t> in_text(0, n - 1);
  std::uniform_int_distribution<index_t> in_pattern(0, m - 1);
  for (index_t e = 0; e < n / std::max<index_t>(m, 1) * (k + 1); ++e) t[static_cast<std::size_t>(in_text(rng))] = letter(rng);
  for (index_t e = 0; e < k; ++e) p[static_cast<std::size_t>(in_pattern(rng))] = letter(rng);
  return {Sequence(std::move(t), sigma), Sequence(std::move(p), sigma)};
}

/// Median wall time in milliseconds of `reps` calls (at least one).
template <typename Fn>
double median_ms(int reps, Fn&& fn) {
  std::vector<double> samples;
  for (int r = 0; r < std::max(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
}

struct Row {
  index_t n = 0;
  index_t m = 0;
  index_t k = 0;
  Algorithm algorithm = Algorithm::automatic;
  double median_ms = 0;
};

/// Times one algorithm on one instance; the occurrence count is accumulated so
/// the work cannot be optimised away.
inline Row time_solver(const Instance& inst, index_t k, Algorithm algorithm, int reps,
                       std::size_t* occurrences = nullptr) {
  SolverConfig config;
  config.algorithm = algorithm;
  std::size_t count = 0;
  const double ms = median_ms(reps, [&] {
    count = 0;
    solve_each(inst.text, inst.pattern, k, config, [&](const Occurrence&) { ++count; });
  });
  if (occurrences != nullptr) *occurrences = count;
  return {inst.text.size(), inst.pattern.size(), k, algorithm, ms};
}

inline void write_csv_header(std::ostream& out) { out << "n,m,k,algorithm,median_ms\n"; }

inline void write_csv_row(std::ostream& out, const Row& row) {
  out << row.n << ',' << row.m << ',' << row.k << ',' << to_string(row.algorithm) << ',' << row.median_ms
      << '\n';
}

}  // namespace cpm::bench

#endif  // CPM_BENCHMARK_HPP
