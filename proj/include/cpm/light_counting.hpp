// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_LIGHT_COUNTING_HPP
#define CPM_LIGHT_COUNTING_HPP

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpm/interval_geometry.hpp"

namespace cpm {

/// Binary string of the given length, stored as its ascending one-positions.
struct SparseBinaryString {
  index_t length = 0;
  std::vector<index_t> ones;

  SparseBinaryString() = default;
  SparseBinaryString(index_t len, std::vector<index_t> positions) : length(len), ones(std::move(positions)) {
    for (std::size_t i = 0; i < ones.size(); ++i) {
      if (ones[i] < 0 || ones[i] >= length || (i > 0 && ones[i] <= ones[i - 1])) {
        throw std::domain_error("SparseBinaryString: ones must be strictly increasing and in range");
      }
    }
  }
};

/// Window starts sharing one count of ones inside [start, start + m - 1].
struct CountPiece {
  Interval starts;
  index_t count = 0;
};

namespace detail {

/// Walks the window starts [0, length - m] piece by piece; the count changes only
/// where a one enters (x - m + 1) or leaves (x + 1). Visits O(|ones|) pieces.
template <typename Visit>
void for_each_count_piece(std::span<const index_t> ones, index_t length, index_t m, Visit&& visit) {
  const index_t last_start = length - m;
  if (m <= 0 || last_start < 0) return;
  const std::size_t u = ones.size();
  std::size_t entered = 0;  // ones with x <= start + m - 1
  std::size_t left = 0;     // ones with x < start
  index_t start = 0;
  while (start <= last_start) {
    while (entered < u && ones[entered] <= start + m - 1) ++entered;
    while (left < u && ones[left] < start) ++left;
    index_t next = last_start + 1;
    if (entered < u) next = std::min(next, ones[entered] - m + 1);
    if (left < u) next = std::min(next, ones[left] + 1);
    visit(Interval(start, next - 1), static_cast<index_t>(entered - left));
    start = next;
  }
}

}  // namespace detail

/// Constant-count pieces of the window starts; adjacent equal counts are merged.
inline std::vector<CountPiece> count_pieces(std::span<const index_t> ones, index_t length, index_t m) {
  std::vector<CountPiece> pieces;
  detail::for_each_count_piece(ones, length, m, [&](Interval iv, index_t count) {
    if (!pieces.empty() && pieces.back().count == count) {
      pieces.back().starts.hi = iv.hi;
    } else {
      pieces.push_back({iv, count});
    }
  });
  return pieces;
}

/// Appends {i : ones in [i, i + m - 1] <= k} as maximal intervals, shifted by `offset`.
inline void light_fragments_into(std::span<const index_t> ones, index_t length, index_t m, index_t k,
                                 std::vector<Interval>& out, index_t offset = 0) {
  const std::size_t mark = out.size();
  detail::for_each_count_piece(ones, length, m, [&](Interval iv, index_t count) {
    if (count > k) return;
    const Interval shifted = shift(iv, offset);
    if (out.size() > mark && out.back().hi + 1 == shifted.lo) {
      out.back().hi = shifted.hi;
    } else {
      out.push_back(shifted);
    }
  });
}

/// Light-Fragments: window starts whose length-m window holds at most k ones.
inline std::vector<Interval> light_fragments(const SparseBinaryString& v, index_t m, index_t k) {
  if (m < 1) throw std::domain_error("light_fragments: window length must be positive");
  std::vector<Interval> out;
  light_fragments_into(v.ones, v.length, m, k, out);
  return out;
}

/// Aligned-Light-Sum: {i : exists j = i (mod q), ones(U_i) + ones(V_j) <= k} as chains of
/// difference q. The first argument carries the output index i.
///
/// Window starts of both strings are cut into constant-count pieces. For each
/// U-piece the admissible V-starts are the maximal runs of V-pieces within the
/// remaining budget; consecutive U-pieces with the same runs share one filter.
inline std::vector<IntervalChain> aligned_light_sum(const SparseBinaryString& u,
                                                    const SparseBinaryString& v, index_t m,
                                                    index_t k, index_t q) {
  if (m < 1 || q < 1) throw std::domain_error("aligned_light_sum: m and q must be positive");
  std::vector<IntervalChain> out;
  if (k < 0) return out;
  const auto u_pieces = count_pieces(u.ones, u.length, m);
  const auto v_pieces = count_pieces(v.ones, v.length, m);
  if (u_pieces.empty() || v_pieces.empty()) return out;

  std::map<index_t, std::vector<Interval>> runs_by_budget;
  auto runs_for = [&](index_t budget) -> const std::vector<Interval>& {
    auto [it, inserted] = runs_by_budget.try_emplace(budget);
    if (inserted) {
      for (const auto& piece : v_pieces) {
        if (piece.count > budget) continue;
        if (!it->second.empty() && it->second.back().hi + 1 == piece.starts.lo) {
          it->second.back().hi = piece.starts.hi;
        } else {
          it->second.push_back(piece.starts);
        }
      }
    }
    return it->second;
  };

  auto emit = [&](Interval z, const std::vector<Interval>& runs) {
    for (const auto& x : runs) {
      for (const auto& c : mod_filter(z, x, q)) out.push_back(c);
    }
  };

  Interval group;
  const std::vector<Interval>* group_runs = nullptr;
  for (const auto& piece : u_pieces) {
    const std::vector<Interval>* runs = piece.count <= k ? &runs_for(k - piece.count) : nullptr;
    if (runs != nullptr && runs->empty()) runs = nullptr;
    if (group_runs != nullptr && runs != nullptr && *runs == *group_runs &&
        group.hi + 1 == piece.starts.lo) {
      group.hi = piece.starts.hi;
      continue;
    }
    if (group_runs != nullptr) emit(group, *group_runs);
    group = piece.starts;
    group_runs = runs;
  }
  if (group_runs != nullptr) emit(group, *group_runs);
  return out;
}

}  // namespace cpm

#endif  // CPM_LIGHT_COUNTING_HPP
