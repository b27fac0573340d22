// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_SUFFIX_ARRAY_HPP
#define CPM_SUFFIX_ARRAY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpm/sequence.hpp"

namespace cpm {

namespace detail {

inline constexpr std::uint32_t kEmpty = 0xffffffffu;

/// SA-IS over s[0, n) with s[n - 1] == 0 the unique smallest symbol and all
/// symbols < alphabet. Linear time.
inline void sais(const std::vector<std::uint32_t>& s, std::vector<std::uint32_t>& sa, std::uint32_t alphabet) {
  const std::size_t n = s.size();
  sa.assign(n, kEmpty);
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> stype(n);
  stype[n - 1] = true;
  for (std::size_t i = n - 1; i-- > 0;) stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  auto is_lms = [&](std::size_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<std::uint32_t> count(alphabet, 0);
  for (std::uint32_t c : s) ++count[c];
  std::vector<std::uint32_t> bucket(alphabet);
  auto heads = [&] {
    std::uint32_t sum = 0;
    for (std::uint32_t c = 0; c < alphabet; ++c) bucket[c] = sum, sum += count[c];
  };
  auto tails = [&] {
    std::uint32_t sum = 0;
    for (std::uint32_t c = 0; c < alphabet; ++c) sum += count[c], bucket[c] = sum;
  };
  auto induce = [&] {
    heads();
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t v = sa[j];
      if (v != kEmpty && v > 0 && !stype[v - 1]) sa[bucket[s[v - 1]]++] = v - 1;
    }
    tails();
    for (std::size_t j = n; j-- > 0;) {
      const std::uint32_t v = sa[j];
      if (v != kEmpty && v > 0 && stype[v - 1]) sa[--bucket[s[v - 1]]] = v - 1;
    }
  };

  // Sort LMS substrings.
  tails();
  for (std::size_t i = 1; i < n; ++i) {
    if (is_lms(i)) sa[--bucket[s[i]]] = static_cast<std::uint32_t>(i);
  }
  induce();

  std::size_t lms_count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_lms(sa[j])) sa[lms_count++] = sa[j];
  }
  std::fill(sa.begin() + static_cast<std::ptrdiff_t>(lms_count), sa.end(), kEmpty);

  auto same_substring = [&](std::size_t a, std::size_t b) {
    if (a == n - 1 || b == n - 1) return false;
    for (std::size_t d = 0;; ++d) {
      if (s[a + d] != s[b + d] || stype[a + d] != stype[b + d]) return false;
      const bool ea = is_lms(a + d);
      const bool eb = is_lms(b + d);
      if (d > 0 && (ea || eb)) return ea && eb;
    }
  };
  std::uint32_t names = 0;
  std::size_t prev = n;
  for (std::size_t j = 0; j < lms_count; ++j) {
    const std::size_t pos = sa[j];
    if (prev == n || !same_substring(prev, pos)) ++names;
    prev = pos;
    sa[lms_count + pos / 2] = names - 1;
  }
  std::vector<std::uint32_t> reduced;
  reduced.reserve(lms_count);
  for (std::size_t j = lms_count; j < n; ++j) {
    if (sa[j] != kEmpty) reduced.push_back(sa[j]);
  }

  // Sort LMS suffixes via the reduced string.
  std::vector<std::uint32_t> reduced_sa;
  if (names < lms_count) {
    sais(reduced, reduced_sa, names);
  } else {
    reduced_sa.assign(lms_count, 0);
    for (std::size_t i = 0; i < lms_count; ++i) reduced_sa[reduced[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::uint32_t> lms_positions;
  lms_positions.reserve(lms_count);
  for (std::size_t i = 1; i < n; ++i) {
    if (is_lms(i)) lms_positions.push_back(static_cast<std::uint32_t>(i));
  }
  for (auto& r : reduced_sa) r = lms_positions[r];

  std::fill(sa.begin(), sa.end(), kEmpty);
  tails();
  for (std::size_t j = lms_count; j-- > 0;) {
    const std::uint32_t p = reduced_sa[j];
    sa[--bucket[s[p]]] = p;
  }
  induce();
}

}  // namespace detail

/// Suffix array by induced sorting (SA-IS), O(n) after ranking the letters.
inline std::vector<std::uint32_t> build_suffix_array(std::span<const symbol_t> text) {
  const std::size_t n = text.size();
  if (n == 0) return {};
  if (n > std::size_t{0xffffffffu} - 2) throw std::length_error("build_suffix_array: input too long");

  // Dense ranks 1..d; 0 is the appended sentinel.
  std::vector<std::uint32_t> s(n + 1, 0);
  const symbol_t top = *std::max_element(text.begin(), text.end());
  std::uint32_t alphabet = 0;
  if (top <= 4 * n + 256) {
    std::vector<std::uint32_t> rank(static_cast<std::size_t>(top) + 1, 0);
    for (symbol_t c : text) rank[c] = 1;
    for (auto& r : rank) r = r != 0 ? ++alphabet : 0;
    for (std::size_t i = 0; i < n; ++i) s[i] = rank[text[i]];
  } else {
    std::vector<symbol_t> letters(text.begin(), text.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    alphabet = static_cast<std::uint32_t>(letters.size());
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = static_cast<std::uint32_t>(std::lower_bound(letters.begin(), letters.end(), text[i]) - letters.begin()) + 1;
    }
  }
  std::vector<std::uint32_t> sa;
  detail::sais(s, sa, alphabet + 1);
  sa.erase(sa.begin());
  return sa;
}

/// Constant-time longest-common-prefix queries between suffixes of a fixed string.
///
/// Holds the inverse suffix array, the LCP array and a block range-minimum
/// structure: in-block prefix/suffix minima plus a sparse table over block
/// minima, so space stays linear and a query scans at most one block.
class LcpOracle {
public:
  LcpOracle() = default;

  explicit LcpOracle(std::span<const symbol_t> text) : n_(text.size()) {
    if (n_ == 0) return;
    const auto sa = build_suffix_array(text);
    rank_.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) rank_[sa[r]] = static_cast<std::uint32_t>(r);

    // Kasai: lcp_[r] = lcp(sa[r-1], sa[r]).
    lcp_.assign(n_, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint32_t r = rank_[i];
      if (r == 0) {
        h = 0;
        continue;
      }
      const std::size_t j = sa[r - 1];
      while (i + h < n_ && j + h < n_ && text[i + h] == text[j + h]) ++h;
      lcp_[r] = static_cast<std::uint32_t>(h);
      if (h > 0) --h;
    }
    build_rmq();
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  /// lcp of the suffixes starting at i and j; 0 if either is past the end.
  [[nodiscard]] std::size_t lcp(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) return 0;
    if (i == j) return n_ - i;
    std::size_t ri = rank_[i];
    std::size_t rj = rank_[j];
    if (ri > rj) std::swap(ri, rj);
    return range_min(ri + 1, rj);
  }

  /// Bytes held by the structure (for space accounting).
  [[nodiscard]] std::size_t memory_bytes() const noexcept {
    return sizeof(std::uint32_t) *
           (rank_.size() + lcp_.size() + prefix_min_.size() + suffix_min_.size() + sparse_.size());
  }

private:
  static constexpr std::size_t kBlock = 32;

  void build_rmq() {
    prefix_min_.resize(n_);
    suffix_min_.resize(n_);
    blocks_ = (n_ + kBlock - 1) / kBlock;
    for (std::size_t b = 0; b < blocks_; ++b) {
      const std::size_t lo = b * kBlock;
      const std::size_t hi = std::min(n_, lo + kBlock);
      prefix_min_[lo] = lcp_[lo];
      for (std::size_t i = lo + 1; i < hi; ++i) prefix_min_[i] = std::min(prefix_min_[i - 1], lcp_[i]);
      suffix_min_[hi - 1] = lcp_[hi - 1];
      for (std::size_t i = hi - 1; i-- > lo;) suffix_min_[i] = std::min(suffix_min_[i + 1], lcp_[i]);
    }
    levels_ = static_cast<std::size_t>(std::bit_width(blocks_));
    sparse_.resize(levels_ * blocks_);
    for (std::size_t b = 0; b < blocks_; ++b) {
      sparse_[b] = suffix_min_[b * kBlock];
    }
    for (std::size_t level = 1; level < levels_; ++level) {
      const std::size_t half = std::size_t{1} << (level - 1);
      const std::uint32_t* prev = sparse_.data() + (level - 1) * blocks_;
      std::uint32_t* cur = sparse_.data() + level * blocks_;
      for (std::size_t b = 0; b + (std::size_t{1} << level) <= blocks_; ++b) {
        cur[b] = std::min(prev[b], prev[b + half]);
      }
    }
  }

  [[nodiscard]] std::size_t range_min(std::size_t l, std::size_t r) const {
    const std::size_t bl = l / kBlock;
    const std::size_t br = r / kBlock;
    if (bl == br) {
      std::uint32_t best = lcp_[l];
      for (std::size_t i = l + 1; i <= r; ++i) best = std::min(best, lcp_[i]);
      return best;
    }
    std::uint32_t best = std::min(suffix_min_[l], prefix_min_[r]);
    if (bl + 1 < br) {
      const std::size_t span = br - bl - 1;
      const std::size_t level = static_cast<std::size_t>(std::bit_width(span)) - 1;
      const std::uint32_t* row = sparse_.data() + level * blocks_;
      best = std::min({best, row[bl + 1], row[br - (std::size_t{1} << level)]});
    }
    return best;
  }

  std::size_t n_ = 0;
  std::size_t blocks_ = 0;
  std::size_t levels_ = 0;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;
  std::vector<std::uint32_t> prefix_min_;
  std::vector<std::uint32_t> suffix_min_;
  std::vector<std::uint32_t> sparse_;
};

}  // namespace cpm

#endif  // CPM_SUFFIX_ARRAY_HPP
