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

#ifndef CROWDSEED_AGGREGATE_H_
#define CROWDSEED_AGGREGATE_H_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/ranking.h"

namespace crowdseed {

enum class AggregateMethod { kKemenyYoung, kMc4, kBorda };

std::string MethodName(AggregateMethod method);
// Accepts "kemeny_young"/"kemeny", "mc4" and "borda".
AggregateMethod ParseMethod(const std::string& name);

struct AggregateResult {
  Ranking ranking;
  // Higher is more important. Sorting descending with ties broken by item
  // index reproduces `ranking`.
  Eigen::VectorXd scores;
  AggregateMethod method = AggregateMethod::kBorda;
  // Total Kendall tau distance to the profile (Kemeny only).
  std::optional<long> cost;
};

// Ranking of items by descending score, ties by ascending index.
Ranking RankByScore(const Eigen::VectorXd& scores);

inline constexpr int kMaxKemenyItems = 20;
inline constexpr int kMaxBruteForceItems = 8;

// Exact Kemeny-Young aggregation by dynamic programming over item subsets.
// Among optimal rankings the lexicographically smallest order is returned.
// scores[i] = F - position(i).
AggregateResult KemenyYoung(const RankingProfile& profile);

// Exhaustive search over all F! orders. Same tie rule as KemenyYoung.
AggregateResult KemenyBruteForce(const RankingProfile& profile);

struct Mc4Options {
  int iterations = 100;
  // Early exit once the L1 change between successive vectors drops below
  // this value.
  double tolerance = 1e-10;
};

// Row-stochastic majority chain: from item i move to each j != i with
// probability 1/F when a strict majority ranks j above i, otherwise stay.
Eigen::MatrixXd Mc4TransitionMatrix(const RankingProfile& profile);

// Power iteration of the majority chain from the uniform vector. Scores are
// the final probability vector. When `trace` is given it receives every
// iterate, starting with the uniform vector.
AggregateResult Mc4(const RankingProfile& profile, const Mc4Options& options = {},
                    std::vector<Eigen::VectorXd>* trace = nullptr);

// scores[i] = mean over voters of (F - position of i).
AggregateResult Borda(const RankingProfile& profile);

AggregateResult Aggregate(const RankingProfile& profile, AggregateMethod method);

}  // namespace crowdseed

#endif  // CROWDSEED_AGGREGATE_H_
