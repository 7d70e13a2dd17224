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

#include "crowdseed/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crowdseed/error.h"
#include "crowdseed/random.h"

namespace crowdseed {

SyntheticSpec SyntheticSpec::WithDefaultWeights(int num_features) {
  SyntheticSpec spec;
  spec.true_weights.resize(num_features);
  for (int i = 0; i < num_features; ++i) {
    spec.true_weights[i] = (i % 2 == 0 ? 1.0 : -1.0) * (num_features - i) / num_features;
  }
  return spec;
}

void SyntheticSpec::Validate() const {
  CROWDSEED_CHECK(num_features() >= 2, "synthetic data needs at least 2 features");
  CROWDSEED_CHECK(true_weights.allFinite() && !true_weights.isZero(0.0),
                  "true weight vector must be finite and non-zero");
  CROWDSEED_CHECK(num_rows >= 1, "synthetic data needs at least one row");
  CROWDSEED_CHECK(noise_scale >= 0.0, "noise scale must be non-negative");
  CROWDSEED_CHECK(num_users >= 1, "synthetic profile needs at least one user");
  CROWDSEED_CHECK(perturbation_rate >= 0.0 && perturbation_rate < 1.0,
                  "perturbation rate must lie in [0, 1)");
  CROWDSEED_CHECK(feature_names.empty() ||
                      static_cast<int>(feature_names.size()) == num_features(),
                  "feature name count does not match the weight vector");
}

SyntheticData GenerateSynthetic(const SyntheticSpec& spec, uint64_t rng_seed) {
  spec.Validate();
  const int f = spec.num_features();
  SyntheticData out;
  out.data.schema.label_name = spec.label_name;
  out.data.schema.feature_names = spec.feature_names;
  if (out.data.schema.feature_names.empty()) {
    for (int i = 0; i < f; ++i) out.data.schema.feature_names.push_back("f" + std::to_string(i));
  }
  out.data.schema.Validate();

  Rng data_rng(DeriveSeed(rng_seed, {1}));
  std::normal_distribution<double> normal(0.0, 1.0);
  out.data.features.resize(spec.num_rows, f);
  out.data.labels.resize(spec.num_rows);
  for (int r = 0; r < spec.num_rows; ++r) {
    for (int j = 0; j < f; ++j) out.data.features(r, j) = normal(data_rng);
    const double noise = spec.noise_scale > 0.0 ? spec.noise_scale * normal(data_rng) : 0.0;
    out.data.labels[r] = out.data.features.row(r).dot(spec.true_weights) + noise > 0.0 ? 1 : 0;
  }

  std::vector<int> order(f);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(spec.true_weights[a]) > std::abs(spec.true_weights[b]);
  });
  out.oracle = Ranking(order);

  Rng user_rng(DeriveSeed(rng_seed, {2}));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  out.profile.feature_names = out.data.schema.feature_names;
  for (int user = 0; user < spec.num_users; ++user) {
    std::vector<int> perturbed = order;
    for (int p = 0; p + 1 < f; ++p) {
      if (u(user_rng) < spec.perturbation_rate) std::swap(perturbed[p], perturbed[p + 1]);
    }
    Eigen::VectorXi directions(f);
    for (int j = 0; j < f; ++j) {
      const int truth = spec.true_weights[j] < 0.0 ? -1 : 1;
      directions[j] = u(user_rng) < spec.perturbation_rate ? -truth : truth;
    }
    out.profile.profile.rankings.emplace_back(std::move(perturbed));
    out.profile.profile.user_ids.push_back("sim" + std::to_string(user));
    out.profile.directions.push_back(directions);
  }
  return out;
}

}  // namespace crowdseed
