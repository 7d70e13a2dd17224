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

#ifndef CROWDSEED_METRICS_H_
#define CROWDSEED_METRICS_H_

#include <Eigen/Dense>

namespace crowdseed {

struct Metrics {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;
  double accuracy = 0.0;
  // 2TP / (2TP + FP + FN), and 0 when that denominator is 0.
  double f1 = 0.0;

  long total() const { return tp + fp + fn + tn; }

  static Metrics FromConfusion(long tp, long fp, long fn, long tn);
};

// Both vectors hold 0/1 labels.
Metrics ComputeMetrics(const Eigen::VectorXi& predicted, const Eigen::VectorXi& actual);

}  // namespace crowdseed

#endif  // CROWDSEED_METRICS_H_
