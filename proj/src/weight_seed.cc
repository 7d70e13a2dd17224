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

#include "crowdseed/weight_seed.h"

#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "crowdseed/error.h"

namespace crowdseed {

using nlohmann::json;

DirectionVotes DirectionVotes::Zero(int num_features) {
  return {Eigen::VectorXi::Zero(num_features), Eigen::VectorXi::Zero(num_features)};
}

void DirectionVotes::Add(const Eigen::VectorXi& signs) {
  CROWDSEED_CHECK(signs.size() == positive.size(), "direction vote arity mismatch");
  for (Eigen::Index i = 0; i < signs.size(); ++i) {
    CROWDSEED_CHECK(signs[i] == 1 || signs[i] == -1, "direction flags must be +1 or -1");
    ++(signs[i] > 0 ? positive : negative)[i];
  }
}

Eigen::VectorXi ResolveDirections(const DirectionVotes& votes) {
  Eigen::VectorXi signs(votes.num_features());
  for (int i = 0; i < votes.num_features(); ++i) {
    const int total = votes.positive[i] + votes.negative[i];
    CROWDSEED_CHECK(total > 0, "feature " + std::to_string(i) + " has no direction votes");
    signs[i] = 2 * votes.negative[i] > total ? -1 : 1;
  }
  return signs;
}

SeedWeights SeedFromScores(const Eigen::VectorXd& scores, const Eigen::VectorXi& signs) {
  CROWDSEED_CHECK(scores.size() >= 2, "seed weights need at least 2 features");
  CROWDSEED_CHECK(signs.size() == scores.size(), "sign vector arity mismatch");
  CROWDSEED_CHECK(scores.allFinite(), "aggregate scores must be finite");
  Eigen::VectorXd w = scores;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (signs[i] < 0) w[i] = -w[i];
  }
  SeedWeights seed;
  const double cur_min = w.minCoeff();
  const double cur_max = w.maxCoeff();
  if (cur_max == cur_min) {
    std::cerr << "warning: all signed scores are equal; seed weights fall back to zero\n";
    seed.values = Eigen::VectorXd::Zero(w.size());
    seed.degenerate = true;
    return seed;
  }
  constexpr double kNewMin = -1.0;
  constexpr double kNewMax = 1.0;
  seed.values = ((w.array() - cur_min) * ((kNewMax - kNewMin) / (cur_max - cur_min)) + kNewMin)
                    .matrix();
  // Pin the extremes against rounding.
  Eigen::Index lo, hi;
  w.minCoeff(&lo);
  w.maxCoeff(&hi);
  seed.values = seed.values.cwiseMax(kNewMin).cwiseMin(kNewMax);
  seed.values[lo] = kNewMin;
  seed.values[hi] = kNewMax;
  return seed;
}

SeedWeights SeedFromAggregate(const AggregateResult& aggregate, const Eigen::VectorXi& signs) {
  SeedWeights seed = SeedFromScores(aggregate.scores, signs);
  seed.provenance = MethodName(aggregate.method);
  return seed;
}

void SaveSeedWeights(const SeedWeights& seed, const std::string& path) {
  CROWDSEED_CHECK(seed.feature_names.empty() ||
                      static_cast<int>(seed.feature_names.size()) == seed.size(),
                  "seed weights and feature names disagree in length");
  json doc;
  doc["features"] = seed.feature_names;
  doc["values"] = std::vector<double>(seed.values.data(), seed.values.data() + seed.size());
  doc["provenance"] = seed.provenance;
  doc["degenerate"] = seed.degenerate;
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

SeedWeights LoadSeedWeights(const std::string& path,
                            const std::vector<std::string>& expected_features) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  SeedWeights seed;
  try {
    const json doc = json::parse(in);
    const auto values = doc.at("values").get<std::vector<double>>();
    seed.feature_names = doc.value("features", std::vector<std::string>{});
    seed.provenance = doc.value("provenance", std::string{});
    seed.degenerate = doc.value("degenerate", false);
    seed.values = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                    static_cast<Eigen::Index>(values.size()));
  } catch (const json::exception& e) {
    throw Error(path + ": malformed seed file: " + e.what());
  }
  if (!seed.feature_names.empty()) {
    CROWDSEED_CHECK(static_cast<int>(seed.feature_names.size()) == seed.size(),
                    path + ": " + std::to_string(seed.size()) + " values for " +
                        std::to_string(seed.feature_names.size()) + " features");
  }
  if (!expected_features.empty()) {
    CROWDSEED_CHECK(seed.size() == static_cast<int>(expected_features.size()),
                    path + ": " + std::to_string(seed.size()) + " values, schema has " +
                        std::to_string(expected_features.size()) + " features");
    CROWDSEED_CHECK(seed.feature_names.empty() || seed.feature_names == expected_features,
                    path + ": feature names do not match the schema");
  }
  for (int i = 0; i < seed.size(); ++i) {
    CROWDSEED_CHECK(std::isfinite(seed.values[i]) && std::abs(seed.values[i]) <= 1.0,
                    path + ": value " + std::to_string(seed.values[i]) +
                        " outside [-1, 1]");
  }
  return seed;
}

}  // namespace crowdseed
