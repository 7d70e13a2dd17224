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

#ifndef CROWDSEED_TRAIN_CONFIG_H_
#define CROWDSEED_TRAIN_CONFIG_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/random.h"
#include "crowdseed/weight_seed.h"

namespace crowdseed {

enum class InitMode { kRandom, kSeeded };

std::string InitModeName(InitMode mode);

// Writes seed-derived weights into the first layer (hidden x inputs).
using FirstLayerSeeder = std::function<void(const Eigen::VectorXd& seed, double jitter,
                                            Rng& rng, Eigen::MatrixXd* weights)>;

// Every row equals the seed, each entry scaled by (1 + eps) with eps uniform
// in [-jitter, jitter].
void ReplicateSeedRows(const Eigen::VectorXd& seed, double jitter, Rng& rng,
                       Eigen::MatrixXd* weights);

struct TrainConfig {
  // Zero is allowed and leaves the initial parameters untouched.
  int epochs = 50;
  double learning_rate = 0.01;
  int batch_size = 32;
  uint64_t rng_seed = 0;
  InitMode init_mode = InitMode::kRandom;
  std::optional<SeedWeights> seed;

  // L2 coefficient of the SVM objective.
  double l2 = 1e-3;

  std::vector<int> hidden_sizes = {12, 10, 8};
  double seed_jitter = 0.05;
  // Defaults to ReplicateSeedRows.
  FirstLayerSeeder seeder;

  // Throws Error on non-positive learning rate or batch size, negative
  // epochs, or a seeded mode without seed weights of `num_features` entries.
  void Validate(int num_features) const;
};

}  // namespace crowdseed

#endif  // CROWDSEED_TRAIN_CONFIG_H_
