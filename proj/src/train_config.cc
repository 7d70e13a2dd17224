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

#include "crowdseed/train_config.h"

#include "crowdseed/error.h"

namespace crowdseed {

std::string InitModeName(InitMode mode) {
  return mode == InitMode::kSeeded ? "seeded" : "random";
}

void ReplicateSeedRows(const Eigen::VectorXd& seed, double jitter, Rng& rng,
                       Eigen::MatrixXd* weights) {
  CROWDSEED_CHECK(weights->cols() == seed.size(), "seed arity does not match the input layer");
  std::uniform_real_distribution<double> eps(-jitter, jitter);
  for (Eigen::Index j = 0; j < weights->rows(); ++j) {
    for (Eigen::Index i = 0; i < weights->cols(); ++i) {
      (*weights)(j, i) = seed[i] * (1.0 + (jitter > 0.0 ? eps(rng) : 0.0));
    }
  }
}

void TrainConfig::Validate(int num_features) const {
  CROWDSEED_CHECK(epochs >= 0, "epochs must be non-negative");
  CROWDSEED_CHECK(learning_rate > 0.0, "learning rate must be positive");
  CROWDSEED_CHECK(batch_size >= 1, "batch size must be positive");
  CROWDSEED_CHECK(l2 >= 0.0, "L2 coefficient must be non-negative");
  CROWDSEED_CHECK(seed_jitter >= 0.0 && seed_jitter < 1.0, "seed jitter must lie in [0, 1)");
  if (init_mode == InitMode::kSeeded) {
    CROWDSEED_CHECK(seed.has_value(), "seeded initialization requires seed weights");
    CROWDSEED_CHECK(seed->size() == num_features,
                    "seed weights have " + std::to_string(seed->size()) +
                        " entries, data has " + std::to_string(num_features) + " features");
  }
}

}  // namespace crowdseed
