// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_INTERVAL_GEOMETRY_HPP
#define CPM_INTERVAL_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpm/sequence.hpp"

namespace cpm {

/// Closed integer interval [lo, hi]; every empty interval is stored as [0, -1].
struct Interval {
  index_t lo = 0;
  index_t hi = -1;

  constexpr Interval() = default;
  constexpr Interval(index_t l, index_t h) : lo(l), hi(h) {
    if (hi < lo) {
      lo = 0;
      hi = -1;
    }
  }

  [[nodiscard]] constexpr bool empty() const noexcept { return hi < lo; }
  [[nodiscard]] constexpr index_t length() const noexcept { return empty() ? 0 : hi - lo + 1; }
  [[nodiscard]] constexpr bool contains(index_t v) const noexcept { return lo <= v && v <= hi; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

constexpr Interval intersect(Interval a, Interval b) {
  return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

constexpr Interval shift(Interval a, index_t r) {
  return a.empty() ? a : Interval(a.lo + r, a.hi + r);
}

/// Chain_q(I, a) = I u (I + q) u ... u (I + a*q).
struct IntervalChain {
  Interval base;
  index_t difference = 1;
  index_t count = 0;  // a: number of extra copies

  [[nodiscard]] constexpr bool empty() const noexcept { return base.empty() || count < 0; }
  [[nodiscard]] constexpr index_t min() const noexcept { return base.lo; }
  [[nodiscard]] constexpr index_t max() const noexcept { return base.hi + count * difference; }

  friend constexpr bool operator==(const IntervalChain&, const IntervalChain&) = default;
};

constexpr IntervalChain single_chain(Interval i, index_t q = 1) { return {i, q, 0}; }

/// Floor division for possibly negative numerators.
constexpr index_t floor_div(index_t a, index_t b) {
  index_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr index_t ceil_div(index_t a, index_t b) { return -floor_div(-a, b); }

constexpr index_t mod(index_t a, index_t b) { return a - floor_div(a, b) * b; }

/// Sorted, merged element set of a chain (test and debug materialization).
inline std::vector<index_t> chain_elements(const IntervalChain& c) {
  std::vector<index_t> out;
  if (c.empty()) return out;
  for (index_t t = 0; t <= c.count; ++t) {
    for (index_t v = c.base.lo + t * c.difference; v <= c.base.hi + t * c.difference; ++v) {
      if (out.empty() || v > out.back()) out.push_back(v);
    }
  }
  return out;
}

/// Sorted disjoint non-adjacent intervals covering the given ascending positions.
inline std::vector<Interval> positions_to_intervals(std::span<const index_t> sorted) {
  std::vector<Interval> out;
  for (index_t v : sorted) {
    if (!out.empty() && out.back().hi + 1 >= v) {
      out.back().hi = std::max(out.back().hi, v);
    } else {
      out.emplace_back(v, v);
    }
  }
  return out;
}

inline std::vector<index_t> interval_elements(std::span<const Interval> intervals) {
  std::vector<index_t> out;
  for (const auto& iv : intervals) {
    for (index_t v = iv.lo; v <= iv.hi; ++v) out.push_back(v);
  }
  return out;
}

/// Axis-aligned block of the grid G_q: rows [row_lo, row_hi] x columns [col_lo, col_hi].
/// Cell (r, c) stands for the integer r * q + c.
struct GridRectangle {
  index_t row_lo = 0;
  index_t row_hi = -1;
  index_t col_lo = 0;
  index_t col_hi = -1;

  [[nodiscard]] constexpr bool empty() const noexcept { return row_hi < row_lo || col_hi < col_lo; }
  friend constexpr bool operator==(const GridRectangle&, const GridRectangle&) = default;
};

/// Decomposes a chain inside [0, n] into at most three rectangles of G_q.
inline std::vector<GridRectangle> chain_to_rectangles(const IntervalChain& c, index_t n) {
  std::vector<GridRectangle> out;
  if (c.empty()) return out;
  const index_t q = c.difference;
  if (q <= 0) throw std::domain_error("chain_to_rectangles: difference must be positive");
  if (c.min() < 0 || c.max() > n) throw std::domain_error("chain_to_rectangles: chain outside [0, n]");

  auto push = [&](GridRectangle r) {
    if (!r.empty()) out.push_back(r);
  };

  if (c.count == 0 || c.base.length() >= q) {
    // A contiguous range [lo, hi]: partial head row, full-row band, partial tail row.
    const index_t lo = c.min();
    const index_t hi = c.max();
    const index_t r_lo = lo / q;
    const index_t r_hi = hi / q;
    if (r_lo == r_hi) {
      push({r_lo, r_lo, lo % q, hi % q});
      return out;
    }
    index_t band_lo = r_lo;
    index_t band_hi = r_hi;
    if (lo % q != 0) {
      push({r_lo, r_lo, lo % q, q - 1});
      ++band_lo;
    }
    if (hi % q != q - 1) {
      push({r_hi, r_hi, 0, hi % q});
      --band_hi;
    }
    push({band_lo, band_hi, 0, q - 1});
    return out;
  }

  // |I| < q: each copy is one row segment, or wraps onto the next row.
  const index_t r0 = c.base.lo / q;
  const index_t c0 = c.base.lo % q;
  const index_t c1 = c0 + c.base.length() - 1;
  if (c1 < q) {
    push({r0, r0 + c.count, c0, c1});
  } else {
    push({r0, r0 + c.count, c0, q - 1});
    push({r0 + 1, r0 + c.count + 1, 0, c1 - q});
  }
  return out;
}

/// 2D difference array shaped like G_q over [0, n]; counts rectangle coverage.
class GridAccumulator {
public:
  GridAccumulator(index_t width, index_t n) : width_(width), n_(n) {
    if (width_ <= 0) throw std::domain_error("GridAccumulator: width must be positive");
    if (n_ < 0) throw std::domain_error("GridAccumulator: negative universe");
    rows_ = n_ / width_ + 1;
    cells_.assign(static_cast<std::size_t>((rows_ + 1) * (width_ + 1)), 0);
  }

  [[nodiscard]] index_t width() const noexcept { return width_; }
  [[nodiscard]] index_t universe() const noexcept { return n_; }

  void add(const GridRectangle& r) {
    if (r.empty()) return;
    if (finalized_) throw std::logic_error("GridAccumulator: add after finalize");
    bump(r.row_lo, r.col_lo, 1);
    bump(r.row_hi + 1, r.col_lo, -1);
    bump(r.row_lo, r.col_hi + 1, -1);
    bump(r.row_hi + 1, r.col_hi + 1, 1);
  }

  void add(const IntervalChain& c) {
    if (c.empty()) return;
    if (c.difference != width_) throw std::domain_error("GridAccumulator: chain difference mismatch");
    for (const auto& r : chain_to_rectangles(c, n_)) add(r);
  }

  void add(Interval iv) {
    if (iv.empty()) return;
    if (width_ == 1) {
      add(GridRectangle{iv.lo, iv.hi, 0, 0});
    } else {
      add(IntervalChain{iv, width_, 0});
    }
  }

  /// Turns the difference array into coverage counts (2D prefix sums).
  void finalize() {
    if (finalized_) return;
    const index_t w = width_ + 1;
    for (index_t r = 0; r <= rows_; ++r) {
      for (index_t c = 0; c <= width_; ++c) {
        std::int32_t v = at(r, c);
        if (r > 0) v += at(r - 1, c);
        if (c > 0) v += at(r, c - 1);
        if (r > 0 && c > 0) v -= at(r - 1, c - 1);
        cells_[static_cast<std::size_t>(r * w + c)] = v;
      }
    }
    finalized_ = true;
  }

  [[nodiscard]] std::int32_t coverage(index_t v) const {
    if (!finalized_) throw std::logic_error("GridAccumulator: coverage before finalize");
    if (v < 0 || v > n_) return 0;
    return at(v / width_, v % width_);
  }

  /// Covered integers of [0, n] as sorted maximal intervals.
  [[nodiscard]] std::vector<Interval> covered() {
    finalize();
    std::vector<Interval> out;
    for (index_t r = 0; r < rows_; ++r) {
      const index_t row_start = r * width_;
      const index_t cols = std::min(width_, n_ - row_start + 1);
      for (index_t c = 0; c < cols; ++c) {
        if (at(r, c) <= 0) continue;
        const index_t v = row_start + c;
        if (!out.empty() && out.back().hi + 1 == v) {
          ++out.back().hi;
        } else {
          out.emplace_back(v, v);
        }
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t memory_bytes() const noexcept { return cells_.size() * sizeof(std::int32_t); }

private:
  [[nodiscard]] std::int32_t at(index_t r, index_t c) const {
    return cells_[static_cast<std::size_t>(r * (width_ + 1) + c)];
  }
  void bump(index_t r, index_t c, std::int32_t delta) {
    if (r > rows_ || c > width_) return;
    cells_[static_cast<std::size_t>(r * (width_ + 1) + c)] += delta;
  }

  index_t width_;
  index_t n_;
  index_t rows_ = 0;
  bool finalized_ = false;
  std::vector<std::int32_t> cells_;
};

/// Union of chains sharing difference q, all inside [0, n].
inline std::vector<Interval> union_chains(std::span<const IntervalChain> chains, index_t n, index_t q) {
  GridAccumulator grid(q, n);
  for (const auto& c : chains) {
    if (c.empty()) continue;
    if (c.difference != q) throw std::domain_error("union_chains: mixed chain differences");
    grid.add(c);
  }
  return grid.covered();
}

/// Union of plain intervals inside [0, n] via start/end counters.
inline std::vector<Interval> union_intervals(std::span<const Interval> intervals, index_t n) {
  GridAccumulator grid(1, n);
  for (const auto& iv : intervals) grid.add(iv);
  return grid.covered();
}

/// {z in Z : z = x (mod q) for some x in X} as at most three disjoint chains of difference q.
inline std::vector<IntervalChain> mod_filter(Interval z, Interval x, index_t q) {
  if (q <= 0) throw std::domain_error("mod_filter: stride must be positive");
  std::vector<IntervalChain> out;
  if (z.empty() || x.empty()) return out;
  if (x.length() >= q) {
    out.push_back({z, q, 0});
    return out;
  }
  // Residue blocks [x0 + t*q, x0 + t*q + len - 1] meeting Z.
  const index_t len = x.length();
  const index_t x0 = mod(x.lo, q);
  const index_t t_lo = ceil_div(z.lo - x0 - len + 1, q);
  const index_t t_hi = floor_div(z.hi - x0, q);
  if (t_lo > t_hi) return out;
  auto block = [&](index_t t) { return Interval(x0 + t * q, x0 + t * q + len - 1); };

  index_t full_lo = t_lo;
  index_t full_hi = t_hi;
  const Interval first = intersect(block(t_lo), z);
  const Interval last = intersect(block(t_hi), z);
  const bool first_clipped = first.length() < len;
  const bool last_clipped = last.length() < len;
  if (first_clipped) {
    out.push_back({first, q, 0});
    ++full_lo;
  }
  if (last_clipped && t_hi >= full_lo) {
    --full_hi;
  }
  if (full_lo <= full_hi) out.push_back({block(full_lo), q, full_hi - full_lo});
  if (last_clipped && t_hi > t_lo) out.push_back({last, q, 0});
  return out;
}

/// Chain shifted by r and clipped to non-negative integers. Clipping may cut the
/// first surviving copy, so the result is up to two chains.
inline std::vector<IntervalChain> shift_chain(const IntervalChain& c, index_t r) {
  std::vector<IntervalChain> out;
  if (c.empty()) return out;
  IntervalChain s{shift(c.base, r), c.difference, c.count};
  if (s.max() < 0) return out;
  if (s.base.lo >= 0) {
    out.push_back(s);
    return out;
  }
  if (s.base.length() >= s.difference) {
    // Copies overlap or touch: the chain is the contiguous range [min, max].
    out.push_back({Interval(0, s.max()), s.difference, 0});
    return out;
  }
  // First copy whose right end is non-negative.
  const index_t t = std::max<index_t>(0, ceil_div(-s.base.hi, s.difference));
  const Interval copy = shift(s.base, t * s.difference);
  if (copy.lo >= 0) {
    out.push_back({copy, s.difference, s.count - t});
    return out;
  }
  out.push_back({Interval(0, copy.hi), s.difference, 0});
  if (t < s.count) out.push_back({shift(copy, s.difference), s.difference, s.count - t - 1});
  return out;
}

}  // namespace cpm

#endif  // CPM_INTERVAL_GEOMETRY_HPP
