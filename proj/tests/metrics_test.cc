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

#include <gtest/gtest.h>

#include "crowdseed/error.h"
#include "metric_cases.h"

namespace crowdseed {
namespace {

TEST(Metrics, HandComputedConfusions) {
  for (const auto& c : ::crowdseed::testing::kConfusionCases) {
    const Metrics m = Metrics::FromConfusion(c.tp, c.fp, c.fn, c.tn);
    EXPECT_NEAR(m.accuracy, c.accuracy, 1e-12) << c.tp << ' ' << c.fp << ' ' << c.fn;
    EXPECT_NEAR(m.f1, c.f1, 1e-12) << c.tp << ' ' << c.fp << ' ' << c.fn;
    EXPECT_EQ(m.total(), c.tp + c.fp + c.fn + c.tn);
  }
}

TEST(Metrics, FromVectors) {
  Eigen::VectorXi predicted(10), actual(10);
  predicted << 1, 1, 1, 1, 0, 0, 0, 0, 0, 0;
  actual << 1, 1, 1, 0, 1, 1, 0, 0, 0, 0;
  const Metrics m = ComputeMetrics(predicted, actual);
  EXPECT_EQ(m.tp, 3);
  EXPECT_EQ(m.fp, 1);
  EXPECT_EQ(m.fn, 2);
  EXPECT_EQ(m.tn, 4);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.7);
}

TEST(Metrics, Errors) {
  EXPECT_THROW(ComputeMetrics(Eigen::VectorXi(0), Eigen::VectorXi(0)), Error);
  EXPECT_THROW(ComputeMetrics(Eigen::VectorXi::Zero(2), Eigen::VectorXi::Zero(3)), Error);
  EXPECT_THROW(ComputeMetrics(Eigen::VectorXi::Constant(2, 2), Eigen::VectorXi::Zero(2)), Error);
}

}  // namespace
}  // namespace crowdseed
