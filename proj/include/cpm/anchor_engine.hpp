// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_ANCHOR_ENGINE_HPP
#define CPM_ANCHOR_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpm/interval_geometry.hpp"
#include "cpm/light_counting.hpp"
#include "cpm/sequence.hpp"
#include "cpm/text_index.hpp"

namespace cpm {

/// Index over P P #1 T #2 for one text (or text window) and one pattern.
///
/// The pattern square occupies [0, 2m) so every rotation rot_x(P) is the
/// fragment [x, x + m); the text starts at 2m + 1.
class AnchorContext {
public:
  AnchorContext(const Sequence& pattern, std::span<const symbol_t> text, index_t k)
      : m_(pattern.size()), n_(static_cast<index_t>(text.size())), k_(k) {
    if (m_ <= 0) throw std::domain_error("AnchorContext: empty pattern");
    if (k_ < 0) throw std::domain_error("AnchorContext: negative k");
    symbol_t sigma = pattern.alphabet_size();
    for (symbol_t s : text) sigma = std::max(sigma, s + 1);
    std::vector<symbol_t> base;
    base.reserve(static_cast<std::size_t>(2 * m_ + n_ + 2));
    base.insert(base.end(), pattern.begin(), pattern.end());
    base.insert(base.end(), pattern.begin(), pattern.end());
    base.push_back(sigma);
    base.insert(base.end(), text.begin(), text.end());
    base.push_back(sigma + 1);
    index_ = TextIndex(Sequence(std::move(base), sigma + 2));
  }

  AnchorContext(const Sequence& pattern, const Sequence& text, index_t k)
      : AnchorContext(pattern, text.view(), k) {}

  [[nodiscard]] index_t m() const noexcept { return m_; }
  [[nodiscard]] index_t n() const noexcept { return n_; }
  [[nodiscard]] index_t k() const noexcept { return k_; }
  [[nodiscard]] const TextIndex& index() const noexcept { return index_; }

  /// Base position of text index i.
  [[nodiscard]] index_t text_pos(index_t i) const noexcept { return 2 * m_ + 1 + i; }
  /// Base position of P^2 index j (j in [0, 2m)).
  [[nodiscard]] index_t square_pos(index_t j) const noexcept { return j; }

  [[nodiscard]] symbol_t text_at(index_t i) const { return index_.base()[text_pos(i)]; }
  [[nodiscard]] symbol_t pattern_at(index_t j) const { return index_.base()[j % m_]; }

private:
  index_t m_;
  index_t n_;
  index_t k_;
  TextIndex index_;
};

/// Reusable buffers for the anchor sweep hot loop.
struct AnchorScratch {
  std::vector<index_t> left;
  std::vector<index_t> right;
  std::vector<index_t> ones;
};

/// Appends every k-occurrence start with anchor `a` as intervals (at most 2k + 1).
///
/// L'' and R'' are the longest mismatch-light extensions of P's suffix ending
/// left of `a` and P's prefix starting at `a`; Light-Fragments on L''R'' gives
/// the starts.
inline void anchor_match_into(const AnchorContext& ctx, index_t a, AnchorScratch& scratch,
                              std::vector<Interval>& out) {
  const index_t m = ctx.m();
  const index_t n = ctx.n();
  const index_t k = ctx.k();
  if (a < 0 || a >= n) return;
  const auto& index = ctx.index();

  index_t left_len = 0;
  scratch.left.clear();
  if (a > 0) {
    left_len = lce_k(index, ctx.text_pos(a - 1), ctx.square_pos(m - 1), k, Direction::backward,
                     std::min(a, m - 1), scratch.left);
  }
  const index_t right_len = lce_k(index, ctx.text_pos(a), ctx.square_pos(0), k, Direction::forward,
                                  std::min(n - a, m), scratch.right);
  if (left_len + right_len < m) return;

  scratch.ones.clear();
  for (auto it = scratch.left.rbegin(); it != scratch.left.rend(); ++it) {
    scratch.ones.push_back(left_len - 1 - *it);
  }
  for (index_t off : scratch.right) scratch.ones.push_back(left_len + off);

  const std::size_t mark = out.size();
  light_fragments_into(scratch.ones, left_len + right_len, m, k, out, a - left_len);
  const Interval allowed(std::max<index_t>(0, a - m + 1), std::min(a, n - m));
  std::size_t keep = mark;
  for (std::size_t t = mark; t < out.size(); ++t) {
    const Interval clipped = intersect(out[t], allowed);
    if (!clipped.empty()) out[keep++] = clipped;
  }
  out.resize(keep);
}

/// Anchor-Match: starts p of k-occurrences whose anchor is `a`.
inline std::vector<Interval> anchor_match(const AnchorContext& ctx, index_t a) {
  AnchorScratch scratch;
  std::vector<Interval> out;
  anchor_match_into(ctx, a, scratch, out);
  return out;
}

/// Pair-Match: starts of k-occurrences in which text position i is aligned with P[j].
inline std::vector<Interval> pair_match(const AnchorContext& ctx, index_t i, index_t j) {
  const index_t m = ctx.m();
  const index_t n = ctx.n();
  if (i < 0 || i >= n || j < 0 || j >= m) throw std::domain_error("pair_match: pair out of range");
  AnchorScratch scratch;
  std::vector<Interval> found;
  const Interval window(i - m + 1, i);
  auto collect = [&](index_t anchor) {
    const std::size_t mark = found.size();
    anchor_match_into(ctx, anchor, scratch, found);
    std::size_t keep = mark;
    for (std::size_t t = mark; t < found.size(); ++t) {
      const Interval clipped = intersect(found[t], window);
      if (!clipped.empty()) found[keep++] = clipped;
    }
    found.resize(keep);
  };
  if (i - j >= 0) collect(i - j);
  // With j = 0 the second anchor i + m lies right of every window containing i.
  if (j > 0 && i + m - j < n) collect(i + m - j);
  std::sort(found.begin(), found.end(), [](Interval x, Interval y) { return x.lo < y.lo; });
  return found;
}

/// Per-anchor mark counters for one text window.
class MarkTable {
public:
  MarkTable(index_t n, index_t m, index_t k)
      : m_(m), threshold_(k + 2), counts_(static_cast<std::size_t>(std::max<index_t>(n, 0)), 0) {}

  [[nodiscard]] index_t threshold() const noexcept { return threshold_; }
  [[nodiscard]] index_t size() const noexcept { return static_cast<index_t>(counts_.size()); }
  [[nodiscard]] std::uint32_t count(index_t anchor) const { return counts_[static_cast<std::size_t>(anchor)]; }

  /// Marks both anchors a matching pair (i, j) can imply: i - j and i + m - j.
  void deposit(index_t i, index_t j) {
    bump(i - j);
    bump(i + m_ - j);
  }

  /// Anchors with at least k + 2 marks, ascending.
  [[nodiscard]] std::vector<index_t> heavy() const {
    std::vector<index_t> out;
    for (std::size_t a = 0; a < counts_.size(); ++a) {
      if (counts_[a] >= static_cast<std::uint32_t>(threshold_)) out.push_back(static_cast<index_t>(a));
    }
    return out;
  }

  void reset() { std::fill(counts_.begin(), counts_.end(), 0u); }

  [[nodiscard]] std::size_t memory_bytes() const noexcept { return counts_.size() * sizeof(std::uint32_t); }

private:
  void bump(index_t a) {
    if (a >= 0 && a < size()) ++counts_[static_cast<std::size_t>(a)];
  }

  index_t m_;
  index_t threshold_;
  std::vector<std::uint32_t> counts_;
};

inline void deposit_marks(MarkTable& table, index_t i, index_t j) { table.deposit(i, j); }

inline std::vector<index_t> heavy_anchors(const MarkTable& table) { return table.heavy(); }

}  // namespace cpm

#endif  // CPM_ANCHOR_ENGINE_HPP
