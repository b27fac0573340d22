// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_PERIODIC_ENGINE_HPP
#define CPM_PERIODIC_ENGINE_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpm/anchor_engine.hpp"
#include "cpm/interval_geometry.hpp"
#include "cpm/light_counting.hpp"
#include "cpm/text_index.hpp"

namespace cpm {

/// One of the 2k + 3 contiguous pattern fragments.
struct Sample {
  index_t start = 0;   // position in P
  index_t length = 0;
  bool periodic = false;  // per(sample) <= length / 2
  index_t period = 0;     // smallest period

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Splits P into 2k + 3 fragments whose lengths differ by at most one; the
/// longer ones come first. Requires m >= 2k + 3.
inline std::vector<Sample> split_samples(const Sequence& pattern, index_t k) {
  const index_t m = pattern.size();
  if (k < 0) throw std::domain_error("split_samples: negative k");
  const index_t parts = 2 * k + 3;
  if (m < parts) throw std::domain_error("split_samples: pattern shorter than 2k + 3");
  const index_t base_len = m / parts;
  const index_t longer = m % parts;
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(parts));
  index_t start = 0;
  for (index_t t = 0; t < parts; ++t) {
    Sample s;
    s.start = start;
    s.length = base_len + (t < longer ? 1 : 0);
    s.period = smallest_period(pattern.view(s.start, s.length));
    s.periodic = 2 * s.period <= s.length;
    samples.push_back(s);
    start += s.length;
  }
  return samples;
}

/// Maximal progression of exact sample occurrences with difference `stride`;
/// the text fragment is [start, start + length).
struct SampleRun {
  index_t start = 0;
  index_t length = 0;
  index_t stride = 1;

  friend bool operator==(const SampleRun&, const SampleRun&) = default;
};

/// Exact occurrences of a sample in the context's text, as progressions.
inline std::vector<ArithmeticOccurrences> sample_occurrences(const AnchorContext& ctx, const Sample& s) {
  return fragment_occurrences(ctx.index(), ctx.square_pos(s.start), s.length, ctx.text_pos(0), ctx.n());
}

/// S-runs of a periodic sample in the text.
inline std::vector<SampleRun> find_runs(const AnchorContext& ctx, const Sample& s) {
  std::vector<SampleRun> runs;
  if (ctx.n() < s.length) return runs;
  for (const auto& group : sample_occurrences(ctx, s)) {
    const index_t end = group.last() + s.length;
    if (!runs.empty() && runs.back().start + runs.back().length - s.length + group.difference == group.first) {
      runs.back().length = end - runs.back().start;
    } else {
      runs.push_back({group.first, end - group.first, group.difference});
    }
  }
  return runs;
}

enum class Side { left, right, both };

/// Misperiods around an exact block base[block_start..block_end]: up to `limit`
/// nearest on each requested side. Positions are base positions, ascending.
struct MisperiodSet {
  index_t block_start = 0;
  index_t block_end = -1;
  std::vector<index_t> left;
  std::vector<index_t> right;

  [[nodiscard]] std::vector<index_t> all() const {
    std::vector<index_t> out(left);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
};

/// Misper_limit relative to the block, restricted to the fragment `region` of the base.
inline MisperiodSet misperiods(const TextIndex& index, index_t block_start, index_t block_end,
                               index_t limit, Side side, Interval region) {
  if (block_end < block_start) throw std::domain_error("misperiods: empty block");
  if (region.empty()) region = Interval(0, index.size() - 1);
  if (block_start < region.lo || block_end > region.hi) {
    throw std::domain_error("misperiods: block outside region");
  }
  MisperiodSet out;
  out.block_start = block_start;
  out.block_end = block_end;
  const index_t q = block_end - block_start + 1;
  std::vector<index_t> offsets;
  if (side != Side::right && block_start > region.lo) {
    lce_k_vs_power(index, block_start, q, block_start - 1, limit, Direction::backward,
                   block_start - region.lo, offsets);
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) out.left.push_back(block_start - 1 - *it);
  }
  if (side != Side::left && block_end < region.hi) {
    lce_k_vs_power(index, block_start, q, block_end + 1, limit, Direction::forward,
                   region.hi - block_end, offsets);
    for (index_t off : offsets) out.right.push_back(block_end + 1 + off);
  }
  return out;
}

inline MisperiodSet misperiods(const TextIndex& index, index_t block_start, index_t block_end,
                               index_t limit, Side side = Side::both) {
  return misperiods(index, block_start, block_end, limit, side, Interval());
}

/// A fragment of a string that is approximately periodic around an exact block:
/// `span` is the fragment, `block` the start of the block Q, and `misperiods`
/// every misperiod inside `span`. All in the coordinates of the host string.
struct PeriodicFragment {
  Interval span;
  index_t block = 0;
  std::vector<index_t> misperiods;
};

/// Periodic-Periodic-Match input: U from the text, V from P^2, sharing Q with |Q| = q.
struct PPMInstance {
  PeriodicFragment text;
  PeriodicFragment pattern;
  index_t q = 1;
  index_t k = 0;
  index_t m = 1;
};

/// Positions p in U (relative to U's start) covering every (J, J')-disjoint
/// k-occurrence U[p, p + m) of some V[x, x + m) with i - p = i' - x (mod q).
/// Extra positions may appear where misperiods align; they are still k-occurrences.
inline std::vector<IntervalChain> periodic_periodic_match(const PPMInstance& inst) {
  std::vector<IntervalChain> out;
  const Interval u = inst.text.span;
  const Interval v = inst.pattern.span;
  if (u.length() < inst.m || v.length() < inst.m) return out;
  const index_t i = inst.text.block - u.lo;
  const index_t i_prime = inst.pattern.block - v.lo;
  const index_t z = mod(i_prime - i, inst.q);

  std::vector<index_t> u_ones;
  for (index_t x : inst.text.misperiods) {
    if (u.contains(x)) u_ones.push_back(x - u.lo + z);
  }
  std::vector<index_t> v_ones;
  for (index_t x : inst.pattern.misperiods) {
    if (v.contains(x)) v_ones.push_back(x - v.lo);
  }
  std::sort(u_ones.begin(), u_ones.end());
  std::sort(v_ones.begin(), v_ones.end());
  const SparseBinaryString u_bits(u.length() + z, std::move(u_ones));
  const SparseBinaryString v_bits(v.length(), std::move(v_ones));

  for (const auto& chain : aligned_light_sum(u_bits, v_bits, inst.m, inst.k, inst.q)) {
    for (const auto& shifted : shift_chain(chain, -z)) out.push_back(shifted);
  }
  return out;
}

/// Which copy of the sample inside P^2 the rotation uses: the second copy when the
/// split point is right of the sample, the first when it is left of it.
enum class SplitSide { right, left };

/// Chains Y (text coordinates) and the matching pairs J x (J' mod m) of one run.
struct RunSampleParts {
  std::vector<IntervalChain> chains;
  std::vector<std::pair<index_t, index_t>> pairs;
  PPMInstance instance;
};

/// Run-Sample-Matching without the Pairs-Match step.
inline RunSampleParts run_sample_parts(const AnchorContext& ctx, const Sample& s, const SampleRun& run,
                                       SplitSide split) {
  if (!s.periodic) throw std::domain_error("run_sample_parts: sample must be periodic");
  const index_t m = ctx.m();
  const index_t n = ctx.n();
  const index_t k = ctx.k();
  const index_t q = s.period;
  const auto& index = ctx.index();

  // J in the text window.
  const Interval text_region(ctx.text_pos(0), ctx.text_pos(n - 1));
  const auto j_text = misperiods(index, ctx.text_pos(run.start), ctx.text_pos(run.start + q - 1), k + 1,
                                 Side::both, text_region);
  // J' in P^2.
  const index_t block = (split == SplitSide::right ? m : 0) + s.start;
  const Interval square_region(ctx.square_pos(0), ctx.square_pos(2 * m - 1));
  const auto j_pattern = misperiods(index, ctx.square_pos(block), ctx.square_pos(block + q - 1), k + 1,
                                    Side::both, square_region);

  RunSampleParts parts;
  auto& inst = parts.instance;
  inst.q = q;
  inst.k = k;
  inst.m = m;

  const index_t full = k + 1;
  for (index_t x : j_text.all()) inst.text.misperiods.push_back(x - ctx.text_pos(0));
  inst.text.block = run.start;
  inst.text.span = Interval(
      static_cast<index_t>(j_text.left.size()) == full ? j_text.left.front() - ctx.text_pos(0) : 0,
      static_cast<index_t>(j_text.right.size()) == full ? j_text.right.back() - ctx.text_pos(0) : n - 1);

  for (index_t x : j_pattern.all()) inst.pattern.misperiods.push_back(x - ctx.square_pos(0));
  inst.pattern.block = block;
  inst.pattern.span = Interval(
      static_cast<index_t>(j_pattern.left.size()) == full ? j_pattern.left.front() - ctx.square_pos(0) : 0,
      static_cast<index_t>(j_pattern.right.size()) == full ? j_pattern.right.back() - ctx.square_pos(0)
                                                            : 2 * m - 1);

  for (const auto& chain : periodic_periodic_match(inst)) {
    parts.chains.push_back({shift(chain.base, inst.text.span.lo), chain.difference, chain.count});
  }

  std::vector<index_t> residues;
  for (index_t x : inst.pattern.misperiods) residues.push_back(x % m);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  for (index_t i : inst.text.misperiods) {
    for (index_t j : residues) parts.pairs.emplace_back(i, j);
  }
  return parts;
}

/// Run-Sample-Matching: X (Pairs-Match intervals) and Y (chains of difference
/// per(sample)), over both split sides. X u Y holds only k-occurrences and covers
/// every k-occurrence whose sample copy matches exactly inside the run.
struct RunSampleResult {
  std::vector<Interval> intervals;
  std::vector<IntervalChain> chains;
};

inline RunSampleResult run_sample_matching(const AnchorContext& ctx, const Sample& s, const SampleRun& run) {
  RunSampleResult result;
  for (SplitSide split : {SplitSide::right, SplitSide::left}) {
    auto parts = run_sample_parts(ctx, s, run, split);
    result.chains.insert(result.chains.end(), parts.chains.begin(), parts.chains.end());
    for (auto [i, j] : parts.pairs) {
      for (const auto& iv : pair_match(ctx, i, j)) result.intervals.push_back(iv);
    }
  }
  return result;
}

/// Sample-Match for a non-periodic sample: Pair-Match at every exact occurrence.
inline std::vector<Interval> sample_match_nonperiodic(const AnchorContext& ctx, const Sample& s) {
  if (s.periodic) throw std::domain_error("sample_match_nonperiodic: sample is periodic");
  std::vector<Interval> out;
  if (ctx.n() < s.length) return out;
  for (const auto& group : sample_occurrences(ctx, s)) {
    for (index_t t = 0; t < group.count; ++t) {
      for (const auto& iv : pair_match(ctx, group.first + t * group.difference, s.start)) out.push_back(iv);
    }
  }
  return out;
}

}  // namespace cpm

#endif  // CPM_PERIODIC_ENGINE_HPP
