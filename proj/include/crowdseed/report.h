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

#ifndef CROWDSEED_REPORT_H_
#define CROWDSEED_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

#include "crowdseed/grid.h"

namespace crowdseed {

struct ArmSummary {
  int n = 0;
  double accuracy_mean = 0.0;
  double accuracy_sd = 0.0;  // Sample standard deviation; 0 when n < 2.
  double f1_mean = 0.0;
  double f1_sd = 0.0;
};

// One seeded arm against the random arm of the same cell, paired by
// repetition.
struct ComparisonRow {
  ModelKind model = ModelKind::kMlp;
  int sample_size = 0;
  double tp_rate = 0.0;
  int epochs = 0;
  InitArm arm = InitArm::kKemeny;
  ArmSummary seeded;
  ArmSummary random;
  int pairs = 0;
  // Means of (seeded - random) over the pairs.
  double accuracy_diff_mean = 0.0;
  double f1_diff_mean = 0.0;
  // Fraction of pairs where seeded accuracy beats random; ties count 1/2.
  double win_rate = 0.0;
  // "ok" or "missing random counterpart".
  std::string status = "ok";
};

ArmSummary Summarize(const std::vector<double>& accuracy, const std::vector<double>& f1);

// Rows in grid order for every seeded arm. Only "ok" records take part.
std::vector<ComparisonRow> SeededVsRandomReport(const GridResult& grid);

void WriteReportCsv(const std::vector<ComparisonRow>& rows, std::ostream& out);
void WriteReportCsv(const std::vector<ComparisonRow>& rows, const std::string& path);

// Mean accuracy and F1 per (init mode, sample size, tp rate, epochs) with
// row labels such as "TP 0.4 epoch 50".
struct TableRow {
  ModelKind model = ModelKind::kMlp;
  InitArm arm = InitArm::kRandom;
  int sample_size = 0;
  std::string label;
  double accuracy = 0.0;
  double f1 = 0.0;
};

std::vector<TableRow> SummaryTable(const GridResult& grid);
void WriteSummaryTable(const std::vector<TableRow>& rows, std::ostream& out);

}  // namespace crowdseed

#endif  // CROWDSEED_REPORT_H_
