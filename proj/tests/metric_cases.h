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

#ifndef CROWDSEED_TESTS_METRIC_CASES_H_
#define CROWDSEED_TESTS_METRIC_CASES_H_

namespace crowdseed::testing {

struct ConfusionCase {
  long tp, fp, fn, tn;
  double accuracy, f1;
};

// Worked by hand: accuracy = (tp + tn) / n, F1 = 2tp / (2tp + fp + fn).
inline constexpr ConfusionCase kConfusionCases[] = {
    {3, 1, 2, 4, 7.0 / 10, 6.0 / 9},
    {0, 0, 0, 5, 1.0, 0.0},
    {5, 0, 0, 0, 1.0, 1.0},
    {0, 5, 0, 0, 0.0, 0.0},
    {0, 0, 5, 0, 0.0, 0.0},
    {1, 1, 1, 1, 0.5, 0.5},
    {10, 0, 10, 0, 0.5, 20.0 / 30},
    {10, 10, 0, 0, 0.5, 20.0 / 30},
    {7, 2, 1, 90, 97.0 / 100, 14.0 / 17},
    {1, 0, 0, 99, 1.0, 1.0},
    {1, 99, 0, 0, 0.01, 2.0 / 101},
    {50, 25, 25, 100, 150.0 / 200, 100.0 / 150},
    {2, 3, 4, 5, 7.0 / 14, 4.0 / 11},
    {100, 1, 1, 0, 100.0 / 102, 200.0 / 202},
    {0, 1, 1, 8, 0.8, 0.0},
    {3, 0, 1, 0, 0.75, 6.0 / 7},
    {4, 4, 4, 4, 0.5, 0.5},
    {9, 1, 0, 0, 0.9, 18.0 / 19},
    {6, 2, 3, 9, 15.0 / 20, 12.0 / 17},
    {1, 2, 3, 4, 0.5, 2.0 / 7},
    {250, 125, 50, 75, 325.0 / 500, 500.0 / 675},
    {0, 0, 1, 1, 0.5, 0.0},
};

}  // namespace crowdseed::testing

#endif  // CROWDSEED_TESTS_METRIC_CASES_H_
