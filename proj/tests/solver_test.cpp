// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace cpm {
namespace {

using testing::seq;

SolverConfig with(Algorithm a, bool witness = false, bool parallel = false) {
  SolverConfig c;
  c.algorithm = a;
  c.want_witness = witness;
  c.parallel_windows = parallel;
  return c;
}

TEST(Solve, KnownWitness) {
  for (Algorithm a : {Algorithm::naive, Algorithm::anchor_sweep, Algorithm::sample_k4, Algorithm::automatic}) {
    const auto report = solve(seq("aaccbbxbaaab"), seq("aabbbb"), 1, with(a, true));
    EXPECT_EQ(report.positions(), brute_force_cpm(seq("aaccbbxbaaab"), seq("aabbbb"), 1).positions());
    const auto it = std::find_if(report.occurrences.begin(), report.occurrences.end(),
                                 [](const Occurrence& o) { return o.position == 4; });
    ASSERT_NE(it, report.occurrences.end());
    EXPECT_EQ(it->rotation->value(), 2);
    EXPECT_EQ(*it->mismatches, 1);
  }
}

TEST(Solve, SquareContainsEveryRotation) {
  const auto p = seq("abcab");
  const auto t = seq("abcababcab");
  for (Algorithm a : {Algorithm::anchor_sweep, Algorithm::sample_k4}) {
    EXPECT_EQ(solve(t, p, 0, with(a)).positions(), (std::vector<index_t>{0, 1, 2, 3, 4, 5}));
  }
}

TEST(Solve, LadderEdges) {
  EXPECT_THROW((void)solve(seq("abc"), Sequence(), 0), std::domain_error);
  EXPECT_THROW((void)solve(seq("abc"), seq("a"), -1), std::domain_error);
  EXPECT_TRUE(solve(seq("ab"), seq("abc"), 1).empty());
  EXPECT_EQ(solve(seq("abcdef"), seq("xyz"), 3).positions(), (std::vector<index_t>{0, 1, 2, 3}));
  const auto witnessed = solve(seq("abcdef"), seq("xyz"), 5, with(Algorithm::automatic, true));
  for (const auto& occ : witnessed.occurrences) EXPECT_EQ(occ.rotation->value(), 0);
}

TEST(Solve, FullyPeriodic) {
  std::string p;
  std::string t;
  for (int i = 0; i < 8; ++i) p += "ab";
  for (int i = 0; i < 16; ++i) t += "ab";
  const auto want = testing::naive_cpm(seq(t), seq(p), 1);
  EXPECT_EQ(static_cast<index_t>(want.size()), 17);
  EXPECT_EQ(solve(seq(t), seq(p), 1, with(Algorithm::sample_k4)).positions(), want);
}

TEST(Solve, AnchorSweepKnownIntervals) {
  const auto got = solve_anchor_sweep(seq("bbaabaaaabaaaabbababbababbaabaab"), seq("abaababaabaababa"), 3).positions();
  for (index_t p : {1, 2, 3, 7, 8, 13, 14}) EXPECT_NE(std::find(got.begin(), got.end(), p), got.end()) << p;
}

TEST(Solve, AlgorithmsAgreeOnFuzz) {
  testing::Rng rng(71);
  for (int it = 0; it < 1500; ++it) {
    const symbol_t sigma = std::vector<symbol_t>{1, 2, 4, 26}[static_cast<std::size_t>(testing::uniform(rng, 0, 3))];
    const index_t m = testing::uniform(rng, 1, 30);
    const index_t n = testing::uniform(rng, 0, 120);
    const index_t k = testing::uniform(rng, 0, 2) == 0 ? testing::uniform(rng, 0, m) : testing::uniform(rng, 0, 3);
    Sequence p;
    Sequence t;
    if (testing::uniform(rng, 0, 1) == 0) {
      p = testing::random_seq(rng, m, sigma);
      t = testing::random_seq(rng, n, sigma);
    } else {
      const auto block = testing::random_block(rng, testing::uniform(rng, 1, 3), sigma);
      p = testing::noisy_periodic(rng, m, block, 0, testing::uniform(rng, 0, 2), sigma);
      t = testing::noisy_periodic(rng, n, block, testing::uniform(rng, 0, 2), testing::uniform(rng, 0, 5), sigma);
    }
    const auto want = brute_force_cpm(t, p, k).positions();
    ASSERT_EQ(solve_anchor_sweep(t, p, k).positions(), want);
    const auto sample = solve(t, p, k, with(Algorithm::sample_k4, true));
    ASSERT_EQ(sample.positions(), want);
    ASSERT_EQ(solve(t, p, k, with(Algorithm::anchor_sweep, true)), sample);
    ASSERT_EQ(solve(t, p, k, with(Algorithm::naive, true)), sample);
    ASSERT_EQ(solve(t, p, k, with(Algorithm::sample_k4, true, true)), sample);
    for (const auto& occ : sample.occurrences) {
      ASSERT_EQ(testing::rotation_distance(t, p, occ.position, occ.rotation->value()), *occ.mismatches);
      ASSERT_LE(*occ.mismatches, k);
    }
  }
}

TEST(Solve, DirectPairStrategyAgrees) {
  testing::Rng rng(72);
  for (int it = 0; it < 500; ++it) {
    const index_t k = testing::uniform(rng, 0, 2);
    const index_t m = testing::uniform(rng, 2 * k + 3, 30);
    const auto block = testing::random_block(rng, testing::uniform(rng, 1, 3), 2);
    const auto p = testing::noisy_periodic(rng, m, block, 0, testing::uniform(rng, 0, 2), 2);
    const auto t = testing::noisy_periodic(rng, testing::uniform(rng, m, 2 * m), block, 1, testing::uniform(rng, 0, 4), 2);
    const AnchorContext ctx(p, t, k);
    const auto sweep = solve_window_anchor(ctx);
    ASSERT_EQ(solve_window_k4(ctx, p, PairStrategy::marking), sweep);
    ASSERT_EQ(solve_window_k4(ctx, p, PairStrategy::direct), sweep);
  }
}

TEST(SolveWindow, NoSampleOccurrenceIsEmpty) {
  const auto p = seq("abcdefgh");
  const AnchorContext ctx(p, seq("zzzzzzzzzzzz"), 1);
  WindowStats stats;
  EXPECT_TRUE(solve_window_k4(ctx, p, PairStrategy::marking, &stats).empty());
  EXPECT_EQ(stats.pairs, 0);
}

TEST(SolveWindow, MixedChainDifferencesAreRejectedUpstream) {
  // All chains produced in one window share one difference.
  testing::Rng rng(73);
  for (int it = 0; it < 500; ++it) {
    const index_t k = testing::uniform(rng, 0, 2);
    const index_t m = testing::uniform(rng, 2 * k + 3, 30);
    const auto p = testing::noisy_periodic(rng, m, {0, 1}, 0, testing::uniform(rng, 0, k), 2);
    const auto t = testing::noisy_periodic(rng, testing::uniform(rng, m, 2 * m), {0, 1}, 0, testing::uniform(rng, 0, 3), 2);
    const AnchorContext ctx(p, t, k);
    EXPECT_NO_THROW((void)solve_window_k4(ctx, p));
  }
}

TEST(PlanWindows, Arithmetic) {
  const auto plan = plan_windows(10, 4);
  EXPECT_EQ(plan.windows, (std::vector<Window>{{0, 8}, {4, 6}, {8, 2}}));
  EXPECT_EQ(plan.owned(0), Interval(0, 3));
  EXPECT_EQ(plan.owned(1), Interval(0, 2));
  EXPECT_TRUE(plan.owned(2).empty());
}

TEST(AlphabetMap, RanksAndForeignLetters) {
  const AlphabetMap map(seq("cab"));
  EXPECT_EQ(map.rank('a'), 1u);
  EXPECT_EQ(map.rank('b'), 2u);
  EXPECT_EQ(map.rank('c'), 3u);
  EXPECT_EQ(map.rank('z'), 4u);
  EXPECT_EQ(map.pattern(), Sequence(std::vector<symbol_t>{3, 1, 2}));
  const AlphabetMap wide(Sequence({7, 5000000}, 5000001));
  EXPECT_EQ(wide.rank(5000000), 2u);
  EXPECT_EQ(wide.rank(6), 3u);
}

TEST(AlphabetMap, ForeignLettersNeverMatch) {
  EXPECT_TRUE(solve(seq("zzzz"), seq("ab"), 1).empty());
  EXPECT_EQ(solve(seq("zazb"), seq("ab"), 1, with(Algorithm::anchor_sweep)).positions(),
            (std::vector<index_t>{0, 1, 2}));
}

TEST(RecoverWitness, HintsAndFallback) {
  const auto p = seq("aabbbb");
  const AnchorContext ctx(p, seq("aaccbbxbaaab"), 1);
  EXPECT_EQ(recover_witness(ctx, 4), (Witness{Rotation(2), 1}));
  const std::vector<WitnessHint> anchor{WitnessHint::from_anchor(8)};
  EXPECT_EQ(recover_witness(ctx, 4, anchor), (Witness{Rotation(2), 1}));
  const std::vector<WitnessHint> residue{WitnessHint::from_residue(0, 2)};
  EXPECT_EQ(recover_witness(ctx, 4, residue).rotation.value(), 2);
  const std::vector<WitnessHint> wrong{WitnessHint::from_anchor(5)};
  EXPECT_EQ(recover_witness(ctx, 4, wrong).rotation.value(), 2);
  EXPECT_THROW((void)recover_witness(ctx, 0), std::logic_error);
}

TEST(RecoverWitness, ExactCase) {
  const auto p = seq("abcd");
  const AnchorContext ctx(p, seq("xcdabx"), 0);
  EXPECT_EQ(recover_witness(ctx, 1), (Witness{Rotation(2), 0}));
}

TEST(ChooseAlgorithm, CostModel) {
  EXPECT_EQ(choose_algorithm(1 << 20, 1 << 16, 1), Algorithm::anchor_sweep);
  EXPECT_EQ(choose_algorithm(1 << 20, 1 << 16, 8), Algorithm::sample_k4);
  EXPECT_EQ(choose_algorithm(1 << 20, 64, 8), Algorithm::anchor_sweep);
  EXPECT_EQ(parse_algorithm("anchor"), Algorithm::anchor_sweep);
  EXPECT_EQ(parse_algorithm("bogus"), std::nullopt);
}

TEST(SolveEach, StreamsAscending) {
  std::vector<index_t> seen;
  solve_each(seq("abababab"), seq("ba"), 0, SolverConfig{}, [&](const Occurrence& o) { seen.push_back(o.position); });
  EXPECT_EQ(seen, (std::vector<index_t>{0, 1, 2, 3, 4, 5, 6}));
}

}  // namespace
}  // namespace cpm
