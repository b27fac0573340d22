// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"

namespace cpm {
namespace {

using testing::seq;

TEST(AnchorMatch, KnownInstance) {
  const auto p = seq("abaababaabaababa");
  const auto t = seq("bbaabaaaabaaaabbababbababbaabaab");
  const AnchorContext ctx(p, t, 3);
  EXPECT_EQ(anchor_match(ctx, 16), (std::vector<Interval>{{1, 3}, {7, 8}, {13, 14}}));
}

TEST(AnchorMatch, ExactSelfMatch) {
  const AnchorContext ctx(seq("abc"), seq("abc"), 0);
  EXPECT_EQ(anchor_match(ctx, 0), (std::vector<Interval>{{0, 0}}));
}

TEST(AnchorMatch, MatchesAnchorOracle) {
  testing::Rng rng(51);
  for (int it = 0; it < 3000; ++it) {
    const symbol_t sigma = static_cast<symbol_t>(testing::uniform(rng, 1, 3));
    const index_t m = testing::uniform(rng, 1, 12);
    const index_t n = testing::uniform(rng, 1, 40);
    const index_t k = testing::uniform(rng, 0, 3);
    const auto p = testing::random_seq(rng, m, sigma);
    const auto t = testing::random_seq(rng, n, sigma);
    const AnchorContext ctx(p, t, k);
    for (index_t a = 0; a < n; ++a) {
      const auto got = anchor_match(ctx, a);
      ASSERT_LE(static_cast<index_t>(got.size()), 2 * k + 2);
      ASSERT_EQ(interval_elements(got), testing::naive_anchor(t, p, k, a));
    }
  }
}

TEST(PairMatch, KnownInstance) {
  const AnchorContext ctx(seq("aabbbb"), seq("aaccbbxbaaab"), 1);
  const auto got = interval_elements(pair_match(ctx, 8, 0));
  EXPECT_NE(std::find(got.begin(), got.end(), 4), got.end());
}

TEST(PairMatch, ExactSelfMatch) {
  const AnchorContext ctx(seq("abc"), seq("abc"), 0);
  EXPECT_EQ(interval_elements(pair_match(ctx, 0, 0)), (std::vector<index_t>{0}));
}

TEST(PairMatch, MatchesDefinition) {
  testing::Rng rng(52);
  for (int it = 0; it < 2000; ++it) {
    const symbol_t sigma = static_cast<symbol_t>(testing::uniform(rng, 1, 3));
    const index_t m = testing::uniform(rng, 1, 10);
    const index_t n = testing::uniform(rng, 1, 30);
    const index_t k = testing::uniform(rng, 0, 3);
    const auto p = testing::random_seq(rng, m, sigma);
    const auto t = testing::random_seq(rng, n, sigma);
    const AnchorContext ctx(p, t, k);
    const index_t i = testing::uniform(rng, 0, n - 1);
    const index_t j = testing::uniform(rng, 0, m - 1);
    ASSERT_EQ(interval_elements(pair_match(ctx, i, j)), testing::naive_pair(t, p, k, i, j));
  }
}

TEST(MarkTable, DepositsBothAnchors) {
  MarkTable table(20, 6, 1);
  table.deposit(8, 2);
  EXPECT_EQ(table.count(6), 1u);
  EXPECT_EQ(table.count(12), 1u);
  EXPECT_TRUE(heavy_anchors(table).empty());
}

TEST(MarkTable, ThresholdBoundary) {
  MarkTable table(20, 6, 1);
  deposit_marks(table, 8, 2);
  deposit_marks(table, 9, 3);
  EXPECT_TRUE(table.heavy().empty());
  deposit_marks(table, 10, 4);
  EXPECT_EQ(table.heavy(), (std::vector<index_t>{6, 12}));
}

TEST(MarkTable, MatchesTally) {
  testing::Rng rng(53);
  for (int it = 0; it < 500; ++it) {
    const index_t n = testing::uniform(rng, 1, 50);
    const index_t m = testing::uniform(rng, 1, 20);
    const index_t k = testing::uniform(rng, 0, 3);
    MarkTable table(n, m, k);
    std::map<index_t, int> tally;
    for (int d = 0; d < 60; ++d) {
      const index_t i = testing::uniform(rng, 0, n - 1);
      const index_t j = testing::uniform(rng, 0, m - 1);
      table.deposit(i, j);
      ++tally[i - j];
      ++tally[i + m - j];
    }
    std::vector<index_t> heavy;
    for (auto [a, c] : tally) {
      if (a < 0 || a >= n) continue;
      ASSERT_EQ(table.count(a), static_cast<std::uint32_t>(c));
      if (c >= k + 2) heavy.push_back(a);
    }
    ASSERT_EQ(table.heavy(), heavy);
  }
}

}  // namespace
}  // namespace cpm
