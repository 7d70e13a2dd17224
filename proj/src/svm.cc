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

#include "crowdseed/svm.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crowdseed/error.h"
#include "crowdseed/random.h"

namespace crowdseed {
namespace {

void CheckArity(const LinearSvm& model, Eigen::Index n) {
  CROWDSEED_CHECK(model.weights.size() == n,
                  "SVM expects " + std::to_string(model.weights.size()) + " features, got " +
                      std::to_string(n));
}

void CheckBothClasses(const Dataset& data) {
  const int pos = data.CountPositives();
  CROWDSEED_CHECK(pos > 0 && pos < data.rows(), "training data must contain both classes");
}

}  // namespace

double LinearSvm::Score(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return weights.dot(x) + bias;
}

LinearSvm SvmInit(int num_features, const TrainConfig& cfg) {
  cfg.Validate(num_features);
  LinearSvm model;
  if (cfg.init_mode == InitMode::kSeeded) {
    model.weights = cfg.seed->values;
  } else {
    Rng rng(DeriveSeed(cfg.rng_seed, {0x5e3d}));
    const double limit = 1.0 / std::sqrt(static_cast<double>(num_features));
    std::uniform_real_distribution<double> u(-limit, limit);
    model.weights.resize(num_features);
    for (int i = 0; i < num_features; ++i) model.weights[i] = u(rng);
  }
  model.bias = 0.0;
  return model;
}

LinearSvm SvmTrain(const Dataset& data, const TrainConfig& cfg) {
  CheckBothClasses(data);
  LinearSvm model = SvmInit(data.num_features(), cfg);
  Rng rng(DeriveSeed(cfg.rng_seed, {0x5b7c}));
  std::vector<int> order(data.rows());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const size_t end = std::min(order.size(), start + cfg.batch_size);
      const double inv = 1.0 / static_cast<double>(end - start);
      Eigen::VectorXd grad_w = cfg.l2 * model.weights;
      double grad_b = 0.0;
      for (size_t k = start; k < end; ++k) {
        const int r = order[k];
        const double y = data.labels[r] == 1 ? 1.0 : -1.0;
        if (y * model.Score(data.features.row(r).transpose()) < 1.0) {
          grad_w.noalias() -= (inv * y) * data.features.row(r).transpose();
          grad_b -= inv * y;
        }
      }
      model.weights.noalias() -= cfg.learning_rate * grad_w;
      model.bias -= cfg.learning_rate * grad_b;
      if (!model.weights.allFinite() || !std::isfinite(model.bias)) {
        throw Error("SVM training diverged in epoch " + std::to_string(epoch));
      }
    }
  }
  return model;
}

int SvmPredictOne(const LinearSvm& model, const Eigen::Ref<const Eigen::VectorXd>& x) {
  CheckArity(model, x.size());
  return model.Score(x) >= 0.0 ? 1 : 0;
}

Eigen::VectorXi SvmPredict(const LinearSvm& model, const Eigen::MatrixXd& features) {
  CheckArity(model, features.cols());
  const Eigen::VectorXd scores = (features * model.weights).array() + model.bias;
  return (scores.array() >= 0.0).cast<int>();
}

Eigen::VectorXd SvmFeatureImportance(const LinearSvm& model) { return model.weights; }

double SvmObjective(const LinearSvm& model, const Eigen::MatrixXd& features,
                    const Eigen::VectorXi& labels, double l2) {
  CheckArity(model, features.cols());
  double hinge = 0.0;
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    const double y = labels[r] == 1 ? 1.0 : -1.0;
    hinge += std::max(0.0, 1.0 - y * model.Score(features.row(r).transpose()));
  }
  return 0.5 * l2 * model.weights.squaredNorm() + hinge / static_cast<double>(features.rows());
}

std::pair<Eigen::VectorXd, double> SvmSubgradient(const LinearSvm& model,
                                                  const Eigen::MatrixXd& features,
                                                  const Eigen::VectorXi& labels, double l2) {
  CheckArity(model, features.cols());
  const double inv = 1.0 / static_cast<double>(features.rows());
  Eigen::VectorXd grad_w = l2 * model.weights;
  double grad_b = 0.0;
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    const double y = labels[r] == 1 ? 1.0 : -1.0;
    if (y * model.Score(features.row(r).transpose()) < 1.0) {
      grad_w -= (inv * y) * features.row(r).transpose();
      grad_b -= inv * y;
    }
  }
  return {grad_w, grad_b};
}

Metrics Evaluate(const LinearSvm& model, const Dataset& test) {
  CROWDSEED_CHECK(test.rows() > 0, "cannot evaluate on an empty dataset");
  return ComputeMetrics(SvmPredict(model, test.features), test.labels);
}

}  // namespace crowdseed
