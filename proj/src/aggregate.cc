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

#include "crowdseed/aggregate.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "crowdseed/error.h"

namespace crowdseed {
namespace {

Eigen::VectorXd PositionalScores(const Ranking& ranking) {
  const int n = ranking.size();
  Eigen::VectorXd scores(n);
  for (int i = 0; i < n; ++i) scores[i] = n - ranking.position_of(i);
  return scores;
}

}  // namespace

std::string MethodName(AggregateMethod method) {
  switch (method) {
    case AggregateMethod::kKemenyYoung:
      return "kemeny_young";
    case AggregateMethod::kMc4:
      return "mc4";
    case AggregateMethod::kBorda:
      return "borda";
  }
  return "unknown";
}

AggregateMethod ParseMethod(const std::string& name) {
  if (name == "kemeny_young" || name == "kemeny") return AggregateMethod::kKemenyYoung;
  if (name == "mc4") return AggregateMethod::kMc4;
  if (name == "borda") return AggregateMethod::kBorda;
  throw Error("unknown aggregation method '" + name + "'");
}

Ranking RankByScore(const Eigen::VectorXd& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  return Ranking(std::move(order));
}

AggregateResult KemenyYoung(const RankingProfile& profile) {
  const Eigen::MatrixXi prefers = PreferenceCounts(profile);
  const int n = profile.num_items();
  CROWDSEED_CHECK(n <= kMaxKemenyItems, "Kemeny-Young supports at most " +
                                            std::to_string(kMaxKemenyItems) + " items");
  // best[S]: minimum disagreement of ordering the items outside S, given
  // that the items of S already occupy the top positions. Placing f directly
  // below S disagrees with every voter that ranks f above some g in S.
  const uint32_t full = (1u << n) - 1;
  std::vector<long> best(size_t{1} << n, std::numeric_limits<long>::max());
  best[full] = 0;
  for (uint32_t s = full; s-- > 0;) {
    long value = std::numeric_limits<long>::max();
    for (int f = 0; f < n; ++f) {
      if (s & (1u << f)) continue;
      long add = 0;
      for (int g = 0; g < n; ++g) {
        if (s & (1u << g)) add += prefers(f, g);
      }
      value = std::min(value, add + best[s | (1u << f)]);
    }
    best[s] = value;
  }
  // Greedy walk picks the smallest index achieving the optimum at each
  // position, which yields the lexicographically smallest optimal order.
  std::vector<int> order;
  uint32_t s = 0;
  while (s != full) {
    for (int f = 0; f < n; ++f) {
      if (s & (1u << f)) continue;
      long add = 0;
      for (int g = 0; g < n; ++g) {
        if (s & (1u << g)) add += prefers(f, g);
      }
      if (add + best[s | (1u << f)] == best[s]) {
        order.push_back(f);
        s |= 1u << f;
        break;
      }
    }
  }
  AggregateResult result;
  result.ranking = Ranking(std::move(order));
  result.scores = PositionalScores(result.ranking);
  result.method = AggregateMethod::kKemenyYoung;
  result.cost = best[0];
  return result;
}

AggregateResult KemenyBruteForce(const RankingProfile& profile) {
  profile.Validate();
  const int n = profile.num_items();
  CROWDSEED_CHECK(n <= kMaxBruteForceItems, "brute-force Kemeny supports at most " +
                                                std::to_string(kMaxBruteForceItems) +
                                                " items");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best_order = order;
  long best_cost = std::numeric_limits<long>::max();
  do {
    const long cost = ProfileDistance(Ranking(order), profile);
    if (cost < best_cost) {
      best_cost = cost;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  AggregateResult result;
  result.ranking = Ranking(std::move(best_order));
  result.scores = PositionalScores(result.ranking);
  result.method = AggregateMethod::kKemenyYoung;
  result.cost = best_cost;
  return result;
}

Eigen::MatrixXd Mc4TransitionMatrix(const RankingProfile& profile) {
  const Eigen::MatrixXi prefers = PreferenceCounts(profile);
  const int n = profile.num_items();
  const int voters = profile.num_voters();
  Eigen::MatrixXd transition = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double leave = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i && 2 * prefers(j, i) > voters) {
        transition(i, j) = 1.0 / n;
        leave += 1.0 / n;
      }
    }
    transition(i, i) = 1.0 - leave;
  }
  return transition;
}

AggregateResult Mc4(const RankingProfile& profile, const Mc4Options& options,
                    std::vector<Eigen::VectorXd>* trace) {
  CROWDSEED_CHECK(options.iterations >= 1, "MC4 needs at least one iteration");
  const Eigen::MatrixXd transition = Mc4TransitionMatrix(profile);
  const int n = profile.num_items();
  Eigen::RowVectorXd r = Eigen::RowVectorXd::Constant(n, 1.0 / n);
  if (trace) trace->push_back(r.transpose());
  for (int it = 0; it < options.iterations; ++it) {
    Eigen::RowVectorXd next = r * transition;
    const double change = (next - r).lpNorm<1>();
    r = std::move(next);
    if (trace) trace->push_back(r.transpose());
    if (change < options.tolerance) break;
  }
  AggregateResult result;
  result.scores = r.transpose();
  result.ranking = RankByScore(result.scores);
  result.method = AggregateMethod::kMc4;
  return result;
}

AggregateResult Borda(const RankingProfile& profile) {
  profile.Validate();
  const int n = profile.num_items();
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  for (const auto& r : profile.rankings) scores += PositionalScores(r);
  scores /= profile.num_voters();
  AggregateResult result;
  result.scores = std::move(scores);
  result.ranking = RankByScore(result.scores);
  result.method = AggregateMethod::kBorda;
  return result;
}

AggregateResult Aggregate(const RankingProfile& profile, AggregateMethod method) {
  switch (method) {
    case AggregateMethod::kKemenyYoung:
      return KemenyYoung(profile);
    case AggregateMethod::kMc4:
      return Mc4(profile);
    case AggregateMethod::kBorda:
      break;
  }
  return Borda(profile);
}

}  // namespace crowdseed
