// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace cpm {
namespace {

using testing::seq;

TEST(Rotate, MovesPrefixToEnd) {
  EXPECT_EQ(rotate(seq("aabbbb"), Rotation(2)), seq("bbbbaa"));
  EXPECT_EQ(rotate(seq("abcde"), Rotation(3)), seq("deabc"));
  EXPECT_EQ(rotate(seq("abcde"), Rotation(0)), seq("abcde"));
}

TEST(Rotate, RejectsOutOfRangeSplit) {
  EXPECT_THROW((void)rotate(seq("abc"), Rotation(3)), std::domain_error);
  EXPECT_THROW((void)rotate(seq("abc"), Rotation(-1)), std::domain_error);
}

TEST(Hamming, BoundedCount) {
  EXPECT_EQ(hamming_bounded(seq("bbbbaa"), seq("bbxbaa"), 1), std::optional<index_t>(1));
  EXPECT_EQ(hamming_bounded(seq("bbbbaa"), seq("bbxbaa"), 0), std::nullopt);
  EXPECT_EQ(hamming_bounded(seq("abc"), seq("abc"), 0), std::optional<index_t>(0));
  EXPECT_THROW((void)hamming_bounded(seq("ab"), seq("abc"), 3), std::domain_error);
}

TEST(Hamming, MatchesPositionwiseCount) {
  testing::Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    const index_t len = testing::uniform(rng, 0, 40);
    const auto a = testing::random_seq(rng, len, 3);
    const auto b = testing::random_seq(rng, len, 3);
    index_t want = 0;
    for (index_t i = 0; i < len; ++i) want += a[i] != b[i];
    EXPECT_EQ(hamming_bounded(a, b, len), std::optional<index_t>(want));
  }
}

TEST(MatchingPairs, KnownRotation) {
  const std::vector<std::pair<index_t, index_t>> want{{4, 2}, {5, 3}, {6, 4}, {7, 5}, {8, 0}, {9, 1}};
  EXPECT_EQ(matching_pairs(4, Rotation(2), 6), want);
}

TEST(MatchingPairs, Definitional) {
  const auto pairs = matching_pairs(3, Rotation(5), 8);
  ASSERT_EQ(pairs.size(), 8u);
  for (index_t t = 0; t < 8; ++t) {
    EXPECT_EQ(pairs[static_cast<std::size_t>(t)], (std::pair<index_t, index_t>{3 + t, (t + 5) % 8}));
  }
  for (auto [i, j] : matching_pairs(0, Rotation(0), 5)) EXPECT_EQ(i, j);
}

TEST(BruteForce, KnownInstance) {
  const auto report = brute_force_cpm(seq("aaccbbxbaaab"), seq("aabbbb"), 1);
  const auto it = std::find_if(report.occurrences.begin(), report.occurrences.end(),
                               [](const Occurrence& o) { return o.position == 4; });
  ASSERT_NE(it, report.occurrences.end());
  EXPECT_EQ(it->rotation->value(), 2);
  EXPECT_EQ(*it->mismatches, 1);
  EXPECT_EQ(it->anchor(6), 8);
}

TEST(BruteForce, LargeKReportsEverything) {
  const auto report = brute_force_cpm(seq("abcdefg"), seq("xyz"), 3);
  EXPECT_EQ(report.positions(), (std::vector<index_t>{0, 1, 2, 3, 4}));
}

TEST(BruteForce, MatchesExhaustiveScan) {
  testing::Rng rng(12);
  for (int it = 0; it < 2000; ++it) {
    const symbol_t sigma = static_cast<symbol_t>(testing::uniform(rng, 1, 4));
    const index_t m = testing::uniform(rng, 1, 16);
    const index_t n = testing::uniform(rng, 0, 64);
    const index_t k = testing::uniform(rng, 0, m);
    const auto t = testing::random_seq(rng, n, sigma);
    const auto p = testing::random_seq(rng, m, sigma);
    const auto report = brute_force_cpm(t, p, k);
    ASSERT_EQ(report.positions(), testing::naive_cpm(t, p, k));
    for (const auto& occ : report.occurrences) {
      EXPECT_EQ(testing::rotation_distance(t, p, occ.position, occ.rotation->value()), *occ.mismatches);
      EXPECT_LE(*occ.mismatches, k);
    }
  }
}

TEST(Sequence, ValidatesAlphabet) {
  EXPECT_THROW(Sequence({0, 3}, 3), std::domain_error);
  const Sequence s({0, 2, 1});
  EXPECT_EQ(s.alphabet_size(), 3u);
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(seq("abc").to_string(), "abc");
}

}  // namespace
}  // namespace cpm
