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

#ifndef CROWDSEED_RANKING_H_
#define CROWDSEED_RANKING_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace crowdseed {

// A strict total order over F items. order()[0] is the most important item.
class Ranking {
 public:
  Ranking() = default;
  // Throws Error unless `order` is a permutation of 0..F-1.
  explicit Ranking(std::vector<int> order);

  static Ranking Identity(int num_items);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int item_at(int position) const { return order_[position]; }
  int position_of(int item) const { return position_[item]; }
  // True if `a` is ranked above `b`.
  bool Prefers(int a, int b) const { return position_[a] < position_[b]; }

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

struct RankingProfile {
  std::vector<Ranking> rankings;
  std::vector<std::string> user_ids;

  int num_voters() const { return static_cast<int>(rankings.size()); }
  int num_items() const { return rankings.empty() ? 0 : rankings.front().size(); }
  // Throws Error if empty, if ids and rankings disagree in count, or if the
  // rankings cover different item counts.
  void Validate() const;
};

// Builds a profile with ids "u0", "u1", ...
RankingProfile MakeProfile(std::vector<Ranking> rankings);

// Number of unordered pairs the two rankings order differently.
long KendallTau(const Ranking& a, const Ranking& b);

// Sum of KendallTau(candidate, r) over every r in the profile.
long ProfileDistance(const Ranking& candidate, const RankingProfile& profile);

// Positionally weighted disagreement count. Every ordered pair (f, g) with f
// above g in `a` and g above f in `b` contributes
//   (k - 2) * |below_f(a) U below_g(b)|,
// where below_c(r) is the set of items ranked under c in r. k == 2 has an
// empty weight sum and falls back to unit weights, i.e. KendallTau.
double WeightedKendallTau(const Ranking& a, const Ranking& b, int k);

// prefers(i, j) = number of voters ranking item i above item j.
Eigen::MatrixXi PreferenceCounts(const RankingProfile& profile);

}  // namespace crowdseed

#endif  // CROWDSEED_RANKING_H_
