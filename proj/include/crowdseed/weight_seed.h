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

#ifndef CROWDSEED_WEIGHT_SEED_H_
#define CROWDSEED_WEIGHT_SEED_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/aggregate.h"

namespace crowdseed {

// Per-feature tallies of direction votes. A negative vote means large values
// of the feature push towards the negative class.
struct DirectionVotes {
  Eigen::VectorXi positive;
  Eigen::VectorXi negative;

  static DirectionVotes Zero(int num_features);
  int num_features() const { return static_cast<int>(positive.size()); }
  // Adds one voter's flags (+1 or -1 per feature).
  void Add(const Eigen::VectorXi& signs);
};

// -1 where strictly more than half of a feature's voters marked it negative,
// +1 otherwise. Throws Error for a feature without votes.
Eigen::VectorXi ResolveDirections(const DirectionVotes& votes);

// Signed initial weights in [-1, 1].
struct SeedWeights {
  Eigen::VectorXd values;
  std::string provenance;
  std::vector<std::string> feature_names;
  // Set when every signed score was equal and the values fell back to zero.
  bool degenerate = false;

  int size() const { return static_cast<int>(values.size()); }
};

// Negates the scores of negative-direction features, then min-max rescales
// the signed vector onto [-1, 1]. Equal signed scores give the zero vector
// with `degenerate` set.
SeedWeights SeedFromScores(const Eigen::VectorXd& scores, const Eigen::VectorXi& signs);
SeedWeights SeedFromAggregate(const AggregateResult& aggregate, const Eigen::VectorXi& signs);

// JSON with feature names, values, provenance and the degenerate flag.
void SaveSeedWeights(const SeedWeights& seed, const std::string& path);
// When `expected_features` is non-empty the file must list exactly those
// names in that order.
SeedWeights LoadSeedWeights(const std::string& path,
                            const std::vector<std::string>& expected_features = {});

}  // namespace crowdseed

#endif  // CROWDSEED_WEIGHT_SEED_H_
