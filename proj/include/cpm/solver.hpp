// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_SOLVER_HPP
#define CPM_SOLVER_HPP

#include <algorithm>
#include <future>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cpm/anchor_engine.hpp"
#include "cpm/interval_geometry.hpp"
#include "cpm/periodic_engine.hpp"
#include "cpm/sequence.hpp"

namespace cpm {

enum class Algorithm { naive, anchor_sweep, sample_k4, automatic };

/// How the sample algorithm resolves matching pairs.
enum class PairStrategy {
  marking,  // mark both anchors, verify anchors with >= k + 2 marks
  direct,   // Pair-Match every pair (slower variant, kept for cross-checks)
};

struct SolverConfig {
  Algorithm algorithm = Algorithm::automatic;
  bool want_witness = false;
  bool parallel_windows = false;
  PairStrategy pairs = PairStrategy::marking;
};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::naive: return "naive";
    case Algorithm::anchor_sweep: return "anchor";
    case Algorithm::sample_k4: return "sample";
    case Algorithm::automatic: return "auto";
  }
  return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "anchor" || name == "anchor_sweep") return Algorithm::anchor_sweep;
  if (name == "sample" || name == "sample_k4") return Algorithm::sample_k4;
  if (name == "auto" || name == "automatic") return Algorithm::automatic;
  return std::nullopt;
}

/// Unit-constant cost model: anchor sweep when n*k <= n + (n/m)*k^4.
inline Algorithm choose_algorithm(index_t n, index_t m, index_t k) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double sweep = nd * kd;
  const double sample = nd + nd / static_cast<double>(m) * kd * kd * kd * kd;
  return sweep <= sample ? Algorithm::anchor_sweep : Algorithm::sample_k4;
}

/// Pattern letters -> ranks 1..d in sorted letter order; anything else -> m + 1.
class AlphabetMap {
public:
  explicit AlphabetMap(const Sequence& pattern) : foreign_(static_cast<symbol_t>(pattern.size() + 1)) {
    std::vector<symbol_t> letters(pattern.begin(), pattern.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    const symbol_t top = letters.empty() ? 0 : letters.back();
    if (top < kDirectLimit) {
      direct_.assign(static_cast<std::size_t>(top) + 1, foreign_);
      for (std::size_t r = 0; r < letters.size(); ++r) direct_[letters[r]] = static_cast<symbol_t>(r + 1);
    } else {
      for (std::size_t r = 0; r < letters.size(); ++r) hashed_.emplace(letters[r], static_cast<symbol_t>(r + 1));
    }
    pattern_ = Sequence(remap(pattern.view()), alphabet_size());
  }

  [[nodiscard]] symbol_t rank(symbol_t letter) const {
    if (!direct_.empty() || hashed_.empty()) {
      return letter < direct_.size() ? direct_[letter] : foreign_;
    }
    auto it = hashed_.find(letter);
    return it == hashed_.end() ? foreign_ : it->second;
  }

  [[nodiscard]] std::vector<symbol_t> remap(std::span<const symbol_t> letters) const {
    std::vector<symbol_t> out(letters.size());
    std::transform(letters.begin(), letters.end(), out.begin(), [this](symbol_t c) { return rank(c); });
    return out;
  }

  [[nodiscard]] symbol_t foreign_rank() const noexcept { return foreign_; }
  [[nodiscard]] symbol_t alphabet_size() const noexcept { return foreign_ + 1; }
  [[nodiscard]] const Sequence& pattern() const noexcept { return pattern_; }

private:
  static constexpr symbol_t kDirectLimit = 1u << 20;
  symbol_t foreign_;
  std::vector<symbol_t> direct_;
  std::unordered_map<symbol_t, symbol_t> hashed_;
  Sequence pattern_;
};

struct Window {
  index_t start = 0;
  index_t length = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Text windows of length <= 2m starting at multiples of m. Window j owns the
/// occurrence starts p with floor(p / m) == j.
struct WindowPlan {
  index_t n = 0;
  index_t m = 1;
  std::vector<Window> windows;

  /// Owned starts of window w, relative to its start (empty if none).
  [[nodiscard]] Interval owned(std::size_t w) const {
    const Window& win = windows[w];
    return Interval(0, std::min(m - 1, win.length - m));
  }
};

inline WindowPlan plan_windows(index_t n, index_t m) {
  if (m <= 0) throw std::domain_error("plan_windows: empty pattern");
  WindowPlan plan{n, m, {}};
  for (index_t start = 0; start < n; start += m) {
    plan.windows.push_back({start, std::min(2 * m, n - start)});
  }
  return plan;
}

/// O(nk) sweep: union of Anchor-Match over every anchor of the context's text.
inline std::vector<Interval> solve_window_anchor(const AnchorContext& ctx) {
  const index_t n = ctx.n();
  const index_t m = ctx.m();
  if (n < m) return {};
  GridAccumulator counters(1, n - 1);
  AnchorScratch scratch;
  std::vector<Interval> found;
  for (index_t a = 0; a < n; ++a) {
    found.clear();
    anchor_match_into(ctx, a, scratch, found);
    for (const auto& iv : found) counters.add(iv);
  }
  return counters.covered();
}

/// Counters from one run of the sample algorithm, for tests and benchmarks.
struct WindowStats {
  index_t periodic_samples = 0;
  index_t runs = 0;
  index_t chains = 0;
  index_t pairs = 0;
  index_t heavy_anchors = 0;
  index_t chain_difference = 0;
};

inline std::vector<Interval> merge_intervals(std::vector<Interval> a, const std::vector<Interval>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), [](Interval x, Interval y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (const auto& iv : a) {
    if (iv.empty()) continue;
    if (!out.empty() && out.back().hi + 1 >= iv.lo) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

/// The O(n + k^4) solver for one text of length in [m, 2m]: every occurrence start
/// in the context's text. Falls back to the anchor sweep when m < 2k + 3.
inline std::vector<Interval> solve_window_k4(const AnchorContext& ctx, const Sequence& pattern,
                                             PairStrategy strategy = PairStrategy::marking,
                                             WindowStats* stats = nullptr) {
  const index_t m = ctx.m();
  const index_t n = ctx.n();
  const index_t k = ctx.k();
  if (n < m) return {};
  if (2 * k + 3 > m) return solve_window_anchor(ctx);

  WindowStats local;
  WindowStats& st = stats != nullptr ? *stats : local;
  GridAccumulator intervals(1, n - 1);
  std::optional<GridAccumulator> chains;
  MarkTable marks(n, m, k);

  auto take_pair = [&](index_t i, index_t j) {
    ++st.pairs;
    if (strategy == PairStrategy::marking) {
      marks.deposit(i, j);
    } else {
      for (const auto& iv : pair_match(ctx, i, j)) intervals.add(iv);
    }
  };

  for (const Sample& s : split_samples(pattern, k)) {
    if (!s.periodic) {
      for (const auto& group : sample_occurrences(ctx, s)) {
        for (index_t t = 0; t < group.count; ++t) take_pair(group.first + t * group.difference, s.start);
      }
      continue;
    }
    ++st.periodic_samples;
    for (const SampleRun& run : find_runs(ctx, s)) {
      ++st.runs;
      for (SplitSide split : {SplitSide::right, SplitSide::left}) {
        const auto parts = run_sample_parts(ctx, s, run, split);
        for (const auto& chain : parts.chains) {
          if (!chains) chains.emplace(chain.difference, n - 1);
          // Chains can only carry the single k-period shared by a majority of samples.
          if (chain.difference != chains->width()) {
            throw std::logic_error("solve_window_k4: interval chains with different differences");
          }
          chains->add(chain);
          ++st.chains;
        }
        for (auto [i, j] : parts.pairs) take_pair(i, j);
      }
    }
  }

  if (strategy == PairStrategy::marking) {
    AnchorScratch scratch;
    std::vector<Interval> found;
    for (index_t a : marks.heavy()) {
      ++st.heavy_anchors;
      found.clear();
      anchor_match_into(ctx, a, scratch, found);
      for (const auto& iv : found) intervals.add(iv);
    }
  }
  if (chains) st.chain_difference = chains->width();

  auto result = intervals.covered();
  if (chains) result = merge_intervals(std::move(result), chains->covered());
  return result;
}

struct Witness {
  Rotation rotation;
  index_t mismatches = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Provenance of a reported start: an anchor, or a residue class of the rotation's
/// start y in P^2 (y in [0, m], rotation y mod m) left by a chain.
struct WitnessHint {
  enum class Kind { anchor, residue };
  Kind kind = Kind::anchor;
  index_t value = 0;
  index_t modulus = 1;

  static WitnessHint from_anchor(index_t a) { return {Kind::anchor, a, 1}; }
  static WitnessHint from_residue(index_t r, index_t q) { return {Kind::residue, r, q}; }
};

/// Checks rot_x(P) against the text at p in O(k) with one kangaroo query over P^2.
inline std::optional<Witness> verify_rotation(const AnchorContext& ctx, index_t p, index_t x) {
  std::vector<index_t> mismatches;
  const index_t len = lce_k(ctx.index(), ctx.text_pos(p), ctx.square_pos(x), ctx.k(), Direction::forward,
                            ctx.m(), mismatches);
  if (len < ctx.m()) return std::nullopt;
  return Witness{Rotation(x), static_cast<index_t>(mismatches.size())};
}

/// A rotation x with distance <= k at reported start p: the smallest verified
/// hinted candidate, else the smallest x overall.
inline Witness recover_witness(const AnchorContext& ctx, index_t p, std::span<const WitnessHint> hints = {}) {
  const index_t m = ctx.m();
  if (p < 0 || p + m > ctx.n()) throw std::domain_error("recover_witness: position out of range");
  std::optional<Witness> best;
  auto consider = [&](index_t x) {
    if (best && best->rotation.value() <= x) return;
    if (auto w = verify_rotation(ctx, p, x)) best = w;
  };
  for (const auto& hint : hints) {
    if (hint.kind == WitnessHint::Kind::anchor) {
      const index_t d = hint.value - p;
      if (d >= 0 && d < m) consider((m - d) % m);
    } else {
      for (index_t y = mod(hint.value, hint.modulus); y <= m; y += hint.modulus) consider(y % m);
    }
  }
  if (best) return *best;
  for (index_t x = 0; x < m; ++x) {
    if (auto w = verify_rotation(ctx, p, x)) return *w;
  }
  throw std::logic_error("recover_witness: reported position has no verifying rotation");
}

namespace detail {

inline std::vector<Occurrence> solve_one_window(const Sequence& text, const AlphabetMap& alphabet,
                                                const WindowPlan& plan, std::size_t w, index_t k,
                                                Algorithm algorithm, const SolverConfig& config) {
  const Window win = plan.windows[w];
  const Interval owned = plan.owned(w);
  std::vector<Occurrence> out;
  if (owned.empty()) return out;
  const auto symbols = alphabet.remap(text.view(win.start, win.length));
  const AnchorContext ctx(alphabet.pattern(), symbols, k);
  const auto found = algorithm == Algorithm::anchor_sweep ? solve_window_anchor(ctx)
                                                          : solve_window_k4(ctx, alphabet.pattern(), config.pairs);
  for (const auto& iv : found) {
    const Interval mine = intersect(iv, owned);
    for (index_t p = mine.lo; p <= mine.hi; ++p) {
      Occurrence occ{win.start + p, std::nullopt, std::nullopt};
      if (config.want_witness) {
        const Witness wit = recover_witness(ctx, p);
        occ.rotation = wit.rotation;
        occ.mismatches = wit.mismatches;
      }
      out.push_back(occ);
    }
  }
  return out;
}

inline Occurrence smallest_rotation_witness(const Sequence& text, const Sequence& pattern, index_t p, index_t k) {
  const index_t m = pattern.size();
  std::vector<symbol_t> square(pattern.begin(), pattern.end());
  square.insert(square.end(), pattern.begin(), pattern.end());
  for (index_t x = 0; x < m; ++x) {
    auto d = hamming_bounded(text.view(p, m), std::span<const symbol_t>(square).subspan(
                                                  static_cast<std::size_t>(x), static_cast<std::size_t>(m)),
                             k);
    if (d) return {p, Rotation(x), *d};
  }
  throw std::logic_error("smallest_rotation_witness: no rotation within k");
}

}  // namespace detail

/// Streams every k-occurrence in ascending order to `sink(const Occurrence&)`.
/// Apart from the input and the sink, memory stays O(m).
template <typename Sink>
void solve_each(const Sequence& text, const Sequence& pattern, index_t k, const SolverConfig& config,
                Sink&& sink) {
  const index_t n = text.size();
  const index_t m = pattern.size();
  if (m == 0) throw std::domain_error("solve: empty pattern");
  if (k < 0) throw std::domain_error("solve: negative k");
  if (n < m) return;

  if (k >= m) {
    for (index_t p = 0; p + m <= n; ++p) {
      Occurrence occ{p, std::nullopt, std::nullopt};
      if (config.want_witness) occ = detail::smallest_rotation_witness(text, pattern, p, k);
      sink(occ);
    }
    return;
  }

  Algorithm algorithm = config.algorithm;
  if (algorithm == Algorithm::automatic) algorithm = choose_algorithm(n, m, k);

  if (algorithm == Algorithm::naive) {
    for (const auto& occ : brute_force_cpm(text, pattern, k).occurrences) {
      if (config.want_witness) {
        sink(detail::smallest_rotation_witness(text, pattern, occ.position, k));
      } else {
        sink(Occurrence{occ.position, std::nullopt, std::nullopt});
      }
    }
    return;
  }

  const AlphabetMap alphabet(pattern);
  const WindowPlan plan = plan_windows(n, m);
  const std::size_t windows = plan.windows.size();
  if (!config.parallel_windows) {
    for (std::size_t w = 0; w < windows; ++w) {
      for (const auto& occ : detail::solve_one_window(text, alphabet, plan, w, k, algorithm, config)) sink(occ);
    }
    return;
  }
  const std::size_t batch = std::max<std::size_t>(2, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < windows; first += batch) {
    std::vector<std::future<std::vector<Occurrence>>> tasks;
    for (std::size_t w = first; w < std::min(windows, first + batch); ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        return detail::solve_one_window(text, alphabet, plan, w, k, algorithm, config);
      }));
    }
    for (auto& task : tasks) {
      for (const auto& occ : task.get()) sink(occ);
    }
  }
}

/// Circular pattern matching with k mismatches: every start p where some rotation
/// of the pattern is within Hamming distance k of text[p, p + m).
inline OccurrenceReport solve(const Sequence& text, const Sequence& pattern, index_t k,
                              const SolverConfig& config = {}) {
  OccurrenceReport report;
  solve_each(text, pattern, k, config, [&](const Occurrence& occ) { report.occurrences.push_back(occ); });
  return report;
}

/// The O(nk) sweep over the whole text at once (O(n) space): one index, every anchor.
inline OccurrenceReport solve_anchor_sweep(const Sequence& text, const Sequence& pattern, index_t k) {
  const index_t m = pattern.size();
  if (m == 0) throw std::domain_error("solve_anchor_sweep: empty pattern");
  if (k < 0) throw std::domain_error("solve_anchor_sweep: negative k");
  OccurrenceReport report;
  if (text.size() < m) return report;
  const AlphabetMap alphabet(pattern);
  const auto symbols = alphabet.remap(text.view());
  const AnchorContext ctx(alphabet.pattern(), symbols, k);
  for (const auto& iv : solve_window_anchor(ctx)) {
    for (index_t p = iv.lo; p <= iv.hi; ++p) report.occurrences.push_back({p, std::nullopt, std::nullopt});
  }
  return report;
}

}  // namespace cpm

#endif  // CPM_SOLVER_HPP
