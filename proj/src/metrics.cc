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

#include "crowdseed/metrics.h"

#include "crowdseed/error.h"

namespace crowdseed {

Metrics Metrics::FromConfusion(long tp, long fp, long fn, long tn) {
  Metrics m;
  m.tp = tp;
  m.fp = fp;
  m.fn = fn;
  m.tn = tn;
  const long total = m.total();
  m.accuracy = total > 0 ? static_cast<double>(tp + tn) / static_cast<double>(total) : 0.0;
  const long denom = 2 * tp + fp + fn;
  m.f1 = denom > 0 ? static_cast<double>(2 * tp) / static_cast<double>(denom) : 0.0;
  return m;
}

Metrics ComputeMetrics(const Eigen::VectorXi& predicted, const Eigen::VectorXi& actual) {
  CROWDSEED_CHECK(predicted.size() == actual.size(), "prediction count mismatch");
  CROWDSEED_CHECK(actual.size() > 0, "no predictions to score");
  long tp = 0, fp = 0, fn = 0, tn = 0;
  for (Eigen::Index i = 0; i < actual.size(); ++i) {
    CROWDSEED_CHECK((predicted[i] == 0 || predicted[i] == 1) && (actual[i] == 0 || actual[i] == 1),
                    "labels must be 0 or 1");
    if (predicted[i] == 1) {
      ++(actual[i] == 1 ? tp : fp);
    } else {
      ++(actual[i] == 1 ? fn : tn);
    }
  }
  return Metrics::FromConfusion(tp, fp, fn, tn);
}

}  // namespace crowdseed
