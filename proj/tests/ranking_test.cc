// Copyright 2026 The Crowdseed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crowdseed/ranking.h"

#include <gtest/gtest.h>

#include "crowdseed/error.h"
#include "test_util.h"

namespace crowdseed {
namespace {

using ::crowdseed::testing::RandomProfile;
using ::crowdseed::testing::RandomRanking;

constexpr int A = 0, B = 1, C = 2;

TEST(Ranking, RejectsNonPermutations) {
  EXPECT_THROW(Ranking({0, 0, 1}), Error);
  EXPECT_THROW(Ranking({0, 3, 1}), Error);
  EXPECT_NO_THROW(Ranking({2, 0, 1}));
}

TEST(KendallTau, Examples) {
  EXPECT_EQ(KendallTau(Ranking({A, B, C}), Ranking({A, B, C})), 0);
  EXPECT_EQ(KendallTau(Ranking({A, B, C}), Ranking({C, B, A})), 3);
  EXPECT_EQ(KendallTau(Ranking({A, B, C}), Ranking({B, A, C})), 1);
  EXPECT_THROW(KendallTau(Ranking({A, B}), Ranking({A, B, C})), Error);
}

TEST(KendallTau, IsAMetric) {
  Rng rng(123);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 9;
    const Ranking a = RandomRanking(n, rng), b = RandomRanking(n, rng), c = RandomRanking(n, rng);
    EXPECT_EQ(KendallTau(a, b), KendallTau(b, a));
    EXPECT_EQ(KendallTau(a, b) == 0, a == b);
    EXPECT_LE(KendallTau(a, c), KendallTau(a, b) + KendallTau(b, c));
    EXPECT_LE(KendallTau(a, b), n * (n - 1) / 2);
  }
}

TEST(ProfileDistance, Examples) {
  const Ranking abc({A, B, C});
  EXPECT_EQ(ProfileDistance(abc, MakeProfile({abc, abc, abc})), 0);
  EXPECT_EQ(ProfileDistance(abc, MakeProfile({abc, Ranking({B, A, C})})), 1);
  EXPECT_EQ(ProfileDistance(Ranking({C, B, A}), MakeProfile({abc, abc})), 6);
  EXPECT_THROW(ProfileDistance(Ranking({A, B}), MakeProfile({abc})), Error);
}

TEST(WeightedKendallTau, KEqualsTwoIsPlainKendall) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const Ranking a = RandomRanking(n, rng), b = RandomRanking(n, rng);
    EXPECT_EQ(WeightedKendallTau(a, b, 2), static_cast<double>(KendallTau(a, b)));
    EXPECT_EQ(WeightedKendallTau(a, a, n), 0.0);
  }
}

TEST(WeightedKendallTau, LiteralWeights) {
  // Disagreeing pair (A, B): below_A(ABC) = {B, C}, below_B(BAC) = {A, C};
  // the union has 3 elements and k - 2 = 1 copy of it is summed.
  EXPECT_EQ(WeightedKendallTau(Ranking({A, B, C}), Ranking({B, A, C}), 3), 3.0);
  // Full reversal: pairs (A,B) -> |{B,C} U {A}| = 3, (A,C) -> |{B,C} U {B,A}| = 3,
  // (B,C) -> |{C} U {B,A}| = 3.
  EXPECT_EQ(WeightedKendallTau(Ranking({A, B, C}), Ranking({C, B, A}), 3), 9.0);
}

TEST(WeightedKendallTau, RejectsKOutOfRange) {
  EXPECT_THROW(WeightedKendallTau(Ranking({A, B, C}), Ranking({A, B, C}), 1), Error);
  EXPECT_THROW(WeightedKendallTau(Ranking({A, B, C}), Ranking({A, B, C}), 4), Error);
}

TEST(PreferenceCounts, PairsSumToVoters) {
  Rng rng(9);
  const RankingProfile profile = RandomProfile(6, 7, rng);
  const Eigen::MatrixXi p = PreferenceCounts(profile);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(p(i, i), 0);
    for (int j = 0; j < 6; ++j) {
      if (i != j) EXPECT_EQ(p(i, j) + p(j, i), 7);
    }
  }
}

}  // namespace
}  // namespace crowdseed
