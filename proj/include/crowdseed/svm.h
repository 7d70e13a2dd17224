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

#ifndef CROWDSEED_SVM_H_
#define CROWDSEED_SVM_H_

#include <utility>

#include <Eigen/Dense>

#include "crowdseed/dataset.h"
#include "crowdseed/metrics.h"
#include "crowdseed/train_config.h"

namespace crowdseed {

// Linear classifier w.x + b; label 1 iff the score is >= 0.
struct LinearSvm {
  Eigen::VectorXd weights;
  double bias = 0.0;

  double Score(const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

// Initial weights: the seed values (seeded) or uniform in [-1/sqrt(F),
// 1/sqrt(F)] (random); bias 0.
LinearSvm SvmInit(int num_features, const TrainConfig& cfg);

// Mini-batch stochastic subgradient descent on
//   l2/2 |w|^2 + mean_i max(0, 1 - y_i (w.x_i + b)),  y_i in {-1, +1}.
// Throws Error for single-class data or a diverging run.
LinearSvm SvmTrain(const Dataset& data, const TrainConfig& cfg);

int SvmPredictOne(const LinearSvm& model, const Eigen::Ref<const Eigen::VectorXd>& x);
Eigen::VectorXi SvmPredict(const LinearSvm& model, const Eigen::MatrixXd& features);

// The weight vector itself.
Eigen::VectorXd SvmFeatureImportance(const LinearSvm& model);

// Regularized hinge objective over the rows of `features` (labels 0/1).
double SvmObjective(const LinearSvm& model, const Eigen::MatrixXd& features,
                    const Eigen::VectorXi& labels, double l2);

// Subgradient (d/dw, d/db) of SvmObjective. Points exactly on the margin
// take the zero branch of the hinge.
std::pair<Eigen::VectorXd, double> SvmSubgradient(const LinearSvm& model,
                                                  const Eigen::MatrixXd& features,
                                                  const Eigen::VectorXi& labels, double l2);

Metrics Evaluate(const LinearSvm& model, const Dataset& test);

}  // namespace crowdseed

#endif  // CROWDSEED_SVM_H_
