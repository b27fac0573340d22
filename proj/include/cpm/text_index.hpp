// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_TEXT_INDEX_HPP
#define CPM_TEXT_INDEX_HPP

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpm/sequence.hpp"
#include "cpm/suffix_array.hpp"

namespace cpm {

enum class Direction { forward, backward };

inline constexpr index_t kUnbounded = std::numeric_limits<index_t>::max();

/// Longest-common-extension index over a base string, in both directions.
///
/// Backward queries run on a second oracle built over the reversed base.
class TextIndex {
public:
  TextIndex() = default;

  explicit TextIndex(Sequence base) : base_(std::move(base)) {
    if (base_.empty()) throw std::domain_error("TextIndex: empty base");
    forward_ = LcpOracle(base_.view());
    std::vector<symbol_t> reversed(base_.begin(), base_.end());
    std::reverse(reversed.begin(), reversed.end());
    backward_ = LcpOracle(reversed);
  }

  [[nodiscard]] const Sequence& base() const noexcept { return base_; }
  [[nodiscard]] index_t size() const noexcept { return base_.size(); }

  /// Longest common prefix of base[i..] and base[j..].
  [[nodiscard]] index_t lcp(index_t i, index_t j) const {
    if (i < 0 || j < 0) return 0;
    return static_cast<index_t>(forward_.lcp(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }

  /// Longest common suffix of base[..i] and base[..j] (both ends inclusive).
  [[nodiscard]] index_t lcs(index_t i, index_t j) const {
    const index_t n = size();
    if (i < 0 || j < 0 || i >= n || j >= n) return 0;
    return static_cast<index_t>(
        backward_.lcp(static_cast<std::size_t>(n - 1 - i), static_cast<std::size_t>(n - 1 - j)));
  }

  /// Extension length in the given direction; backward offsets count leftwards from i and j.
  [[nodiscard]] index_t extend(index_t i, index_t j, Direction dir) const {
    return dir == Direction::forward ? lcp(i, j) : lcs(i, j);
  }

  [[nodiscard]] std::size_t memory_bytes() const noexcept {
    return forward_.memory_bytes() + backward_.memory_bytes() +
           static_cast<std::size_t>(base_.size()) * sizeof(symbol_t);
  }

private:
  Sequence base_;
  LcpOracle forward_;
  LcpOracle backward_;
};

struct Extension {
  index_t length = 0;
  std::vector<index_t> mismatches;  // offsets from the start point, ascending
};

namespace detail {

inline index_t room(index_t from, index_t size, Direction dir) {
  return dir == Direction::forward ? size - from : from + 1;
}

inline index_t step(index_t pos, index_t offset, Direction dir) {
  return dir == Direction::forward ? pos + offset : pos - offset;
}

}  // namespace detail

/// Kangaroo extension: longest run from (i, j) with at most k mismatches,
/// using at most k + 1 exact extension queries. Mismatch offsets go to `mismatches`.
inline index_t lce_k(const TextIndex& index, index_t i, index_t j, index_t k, Direction dir,
                     index_t max_len, std::vector<index_t>& mismatches) {
  mismatches.clear();
  const index_t n = index.size();
  if (i < 0 || j < 0 || i >= n || j >= n) return 0;
  const index_t limit = std::min({max_len, detail::room(i, n, dir), detail::room(j, n, dir)});
  index_t length = 0;
  while (length < limit) {
    length += index.extend(detail::step(i, length, dir), detail::step(j, length, dir), dir);
    if (length >= limit) return limit;
    if (static_cast<index_t>(mismatches.size()) == k) return length;
    mismatches.push_back(length);
    ++length;
  }
  return std::min(length, limit);
}

inline Extension lce_k(const TextIndex& index, index_t i, index_t j, index_t k, Direction dir,
                       index_t max_len = kUnbounded) {
  Extension out;
  out.length = lce_k(index, i, j, k, dir, max_len, out.mismatches);
  return out;
}

namespace detail {

/// Exact extension of base from `from` against the periodic string Q^inf read
/// from phase `phase` (backward: Q read right to left). At most three lcp queries.
inline index_t extend_vs_power(const TextIndex& index, index_t q_start, index_t q_len, index_t from,
                               index_t phase, Direction dir, index_t limit) {
  // In backward mode Q is read from its last symbol, so phase 0 is q_start + q_len - 1.
  const index_t q_anchor = dir == Direction::forward ? q_start : q_start + q_len - 1;
  const index_t head = std::min(q_len - phase, limit);
  const index_t l0 = std::min(index.extend(from, step(q_anchor, phase, dir), dir), head);
  if (l0 < head || head == limit) return l0;
  const index_t y = step(from, head, dir);
  const index_t rest = limit - head;
  const index_t l1 = std::min(index.extend(y, q_anchor, dir), std::min(q_len, rest));
  if (l1 < q_len || l1 == rest) return head + l1;
  const index_t l2 = std::min(index.extend(y, step(y, q_len, dir), dir), rest - q_len);
  return head + q_len + l2;
}

}  // namespace detail

/// Extension of base from `from` against Q^inf with Q = base[q_start, q_start + q_len),
/// allowing k mismatches. Backward mode reads Q^inf leftwards ending with Q's last symbol.
inline index_t lce_k_vs_power(const TextIndex& index, index_t q_start, index_t q_len, index_t from,
                              index_t k, Direction dir, index_t max_len,
                              std::vector<index_t>& mismatches) {
  mismatches.clear();
  const index_t n = index.size();
  if (q_len <= 0 || q_start < 0 || q_start + q_len > n) {
    throw std::domain_error("lce_k_vs_power: invalid period block");
  }
  if (from < 0 || from >= n) return 0;
  const index_t limit = std::min(max_len, detail::room(from, n, dir));
  index_t length = 0;
  while (length < limit) {
    length += detail::extend_vs_power(index, q_start, q_len, detail::step(from, length, dir),
                                      length % q_len, dir, limit - length);
    if (length >= limit) return limit;
    if (static_cast<index_t>(mismatches.size()) == k) return length;
    mismatches.push_back(length);
    ++length;
  }
  return std::min(length, limit);
}

inline Extension lce_k_vs_power(const TextIndex& index, index_t q_start, index_t q_len,
                                index_t from, index_t k, Direction dir,
                                index_t max_len = kUnbounded) {
  Extension out;
  out.length = lce_k_vs_power(index, q_start, q_len, from, k, dir, max_len, out.mismatches);
  return out;
}

/// KMP failure function: border[i] = longest proper border of s[0..i].
inline std::vector<index_t> failure_function(std::span<const symbol_t> s) {
  std::vector<index_t> border(s.size(), 0);
  index_t b = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (b > 0 && s[i] != s[static_cast<std::size_t>(b)]) b = border[static_cast<std::size_t>(b - 1)];
    if (s[i] == s[static_cast<std::size_t>(b)]) ++b;
    border[i] = b;
  }
  return border;
}

inline index_t smallest_period(std::span<const symbol_t> s) {
  if (s.empty()) throw std::domain_error("smallest_period: empty string");
  return static_cast<index_t>(s.size()) - failure_function(s).back();
}

inline index_t smallest_period(const Sequence& s) { return smallest_period(s.view()); }

/// Occurrences first, first + difference, ..., first + (count - 1) * difference.
struct ArithmeticOccurrences {
  index_t first = 0;
  index_t difference = 1;
  index_t count = 0;

  [[nodiscard]] index_t last() const noexcept { return first + (count - 1) * difference; }
  friend bool operator==(const ArithmeticOccurrences&, const ArithmeticOccurrences&) = default;
};

/// All exact occurrences of F = base[f_start, +f_len) inside G = base[g_start, +g_len),
/// relative to g_start, grouped into maximal progressions with difference per(F).
///
/// Runs a KMP scan of F over G, so a query costs O(f_len + g_len).
inline std::vector<ArithmeticOccurrences> fragment_occurrences(const TextIndex& index,
                                                               index_t f_start, index_t f_len,
                                                               index_t g_start, index_t g_len) {
  if (f_len <= 0) throw std::domain_error("fragment_occurrences: empty fragment");
  const auto& base = index.base();
  if (f_start < 0 || f_start + f_len > base.size() || g_start < 0 || g_len < 0 ||
      g_start + g_len > base.size()) {
    throw std::domain_error("fragment_occurrences: fragment out of range");
  }
  const auto f = base.view(f_start, f_len);
  const auto g = base.view(g_start, g_len);
  const auto border = failure_function(f);
  const index_t period = f_len - border.back();

  std::vector<ArithmeticOccurrences> groups;
  index_t matched = 0;
  for (index_t t = 0; t < g_len; ++t) {
    const symbol_t c = g[static_cast<std::size_t>(t)];
    while (matched > 0 && (matched == f_len || f[static_cast<std::size_t>(matched)] != c)) {
      matched = border[static_cast<std::size_t>(matched - 1)];
    }
    if (f[static_cast<std::size_t>(matched)] == c) ++matched;
    if (matched == f_len) {
      const index_t pos = t - f_len + 1;
      if (!groups.empty() && groups.back().last() + period == pos) {
        ++groups.back().count;
      } else {
        groups.push_back({pos, period, 1});
      }
    }
  }
  return groups;
}

}  // namespace cpm

#endif  // CPM_TEXT_INDEX_HPP
