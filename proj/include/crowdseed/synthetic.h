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

#ifndef CROWDSEED_SYNTHETIC_H_
#define CROWDSEED_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/dataset.h"
#include "crowdseed/profile_io.h"
#include "crowdseed/ranking.h"

namespace crowdseed {

// Planted linear problem with simulated volunteers who know the true
// feature order up to random adjacent swaps.
struct SyntheticSpec {
  int num_rows = 6400;
  // w*; its length is the feature count.
  Eigen::VectorXd true_weights;
  // y = 1 iff w*.x + noise_scale * N(0, 1) > 0, x ~ N(0, I).
  double noise_scale = 0.5;
  int num_users = 5;
  // Probability of each adjacent transposition applied to the oracle
  // ranking, and of flipping each direction vote.
  double perturbation_rate = 0.1;
  std::vector<std::string> feature_names;  // Defaults to f0, f1, ...
  std::string label_name = "label";

  // Alternating signs with magnitudes (F - i) / F.
  static SyntheticSpec WithDefaultWeights(int num_features);

  int num_features() const { return static_cast<int>(true_weights.size()); }
  void Validate() const;
};

struct SyntheticData {
  Dataset data;
  // Features ordered by |w*| descending, ties by index.
  Ranking oracle;
  ElicitedProfile profile;
};

SyntheticData GenerateSynthetic(const SyntheticSpec& spec, uint64_t rng_seed);

}  // namespace crowdseed

#endif  // CROWDSEED_SYNTHETIC_H_
