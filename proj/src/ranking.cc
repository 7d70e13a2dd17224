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

#include <numeric>
#include <set>

#include "crowdseed/error.h"

namespace crowdseed {

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const int item = order_[p];
    CROWDSEED_CHECK(item >= 0 && item < n,
                    "ranking item " + std::to_string(item) + " out of range");
    CROWDSEED_CHECK(position_[item] < 0,
                    "ranking lists item " + std::to_string(item) + " twice");
    position_[item] = p;
  }
}

Ranking Ranking::Identity(int num_items) {
  std::vector<int> order(num_items);
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

void RankingProfile::Validate() const {
  CROWDSEED_CHECK(!rankings.empty(), "ranking profile is empty");
  CROWDSEED_CHECK(user_ids.size() == rankings.size(),
                  "ranking profile has mismatched user ids");
  for (const auto& r : rankings) {
    CROWDSEED_CHECK(r.size() == rankings.front().size(),
                    "rankings in a profile must cover the same items");
  }
}

RankingProfile MakeProfile(std::vector<Ranking> rankings) {
  RankingProfile profile;
  for (size_t i = 0; i < rankings.size(); ++i) profile.user_ids.push_back("u" + std::to_string(i));
  profile.rankings = std::move(rankings);
  return profile;
}

long KendallTau(const Ranking& a, const Ranking& b) {
  CROWDSEED_CHECK(a.size() == b.size(), "Kendall tau of rankings with different sizes");
  long disagreements = 0;
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      disagreements += (a.Prefers(i, j) != b.Prefers(i, j));
    }
  }
  return disagreements;
}

long ProfileDistance(const Ranking& candidate, const RankingProfile& profile) {
  long total = 0;
  for (const auto& r : profile.rankings) total += KendallTau(candidate, r);
  return total;
}

double WeightedKendallTau(const Ranking& a, const Ranking& b, int k) {
  CROWDSEED_CHECK(a.size() == b.size(), "Kendall tau of rankings with different sizes");
  CROWDSEED_CHECK(k >= 2 && k <= a.size(), "weighted Kendall tau needs 2 <= k <= F");
  if (k == 2) return static_cast<double>(KendallTau(a, b));
  const int n = a.size();
  double total = 0.0;
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (f == g || !a.Prefers(f, g) || !b.Prefers(g, f)) continue;
      std::set<int> below;
      for (int p = a.position_of(f) + 1; p < n; ++p) below.insert(a.item_at(p));
      for (int p = b.position_of(g) + 1; p < n; ++p) below.insert(b.item_at(p));
      total += static_cast<double>(k - 2) * static_cast<double>(below.size());
    }
  }
  return total;
}

Eigen::MatrixXi PreferenceCounts(const RankingProfile& profile) {
  profile.Validate();
  const int n = profile.num_items();
  Eigen::MatrixXi prefers = Eigen::MatrixXi::Zero(n, n);
  for (const auto& r : profile.rankings) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) ++prefers(r.item_at(p), r.item_at(q));
    }
  }
  return prefers;
}

}  // namespace crowdseed
