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

#include "crowdseed/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include "crowdseed/csv.h"
#include "crowdseed/error.h"

namespace crowdseed {
namespace {

// (model, size, rate, epochs) in first-seen order.
using CellKey = std::tuple<int, int, double, int>;

CellKey KeyOf(const GridRecord& r) {
  return {static_cast<int>(r.model), r.sample_size, r.tp_rate, r.epochs};
}

double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double SampleSd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = Mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

ArmSummary Summarize(const std::vector<double>& accuracy, const std::vector<double>& f1) {
  ArmSummary s;
  s.n = static_cast<int>(accuracy.size());
  s.accuracy_mean = Mean(accuracy);
  s.accuracy_sd = SampleSd(accuracy);
  s.f1_mean = Mean(f1);
  s.f1_sd = SampleSd(f1);
  return s;
}

std::vector<ComparisonRow> SeededVsRandomReport(const GridResult& grid) {
  std::vector<CellKey> cells;
  // cell -> arm -> repetition -> record
  std::map<CellKey, std::map<InitArm, std::map<int, const GridRecord*>>> index;
  for (const auto& r : grid.records) {
    if (!r.ok()) continue;
    const CellKey key = KeyOf(r);
    if (!index.count(key)) cells.push_back(key);
    index[key][r.arm][r.repetition] = &r;
  }

  std::vector<ComparisonRow> rows;
  for (const CellKey& key : cells) {
    const auto& arms = index.at(key);
    const auto random_it = arms.find(InitArm::kRandom);
    for (const auto& [arm, reps] : arms) {
      if (arm == InitArm::kRandom) continue;
      ComparisonRow row;
      row.model = static_cast<ModelKind>(std::get<0>(key));
      row.sample_size = std::get<1>(key);
      row.tp_rate = std::get<2>(key);
      row.epochs = std::get<3>(key);
      row.arm = arm;
      std::vector<double> sa, sf, ra, rf, da, df;
      double wins = 0.0;
      for (const auto& [rep, rec] : reps) {
        sa.push_back(rec->metrics.accuracy);
        sf.push_back(rec->metrics.f1);
        if (random_it == arms.end()) continue;
        const auto partner = random_it->second.find(rep);
        if (partner == random_it->second.end()) continue;
        const Metrics& base = partner->second->metrics;
        da.push_back(rec->metrics.accuracy - base.accuracy);
        df.push_back(rec->metrics.f1 - base.f1);
        wins += rec->metrics.accuracy > base.accuracy    ? 1.0
                : rec->metrics.accuracy == base.accuracy ? 0.5
                                                         : 0.0;
      }
      if (random_it != arms.end()) {
        for (const auto& [rep, rec] : random_it->second) {
          ra.push_back(rec->metrics.accuracy);
          rf.push_back(rec->metrics.f1);
        }
      }
      row.seeded = Summarize(sa, sf);
      row.random = Summarize(ra, rf);
      row.pairs = static_cast<int>(da.size());
      if (row.pairs == 0) {
        row.status = "missing random counterpart";
      } else {
        row.accuracy_diff_mean = Mean(da);
        row.f1_diff_mean = Mean(df);
        row.win_rate = wins / row.pairs;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteReportCsv(const std::vector<ComparisonRow>& rows, std::ostream& out) {
  out << "model,sample_size,tp_rate,epochs,init_mode,pairs,seeded_accuracy_mean,"
         "seeded_accuracy_sd,seeded_f1_mean,seeded_f1_sd,random_accuracy_mean,"
         "random_accuracy_sd,random_f1_mean,random_f1_sd,accuracy_diff_mean,f1_diff_mean,"
         "win_rate,status\n";
  for (const auto& r : rows) {
    out << ModelKindName(r.model) << ',' << r.sample_size << ',' << FormatDouble(r.tp_rate)
        << ',' << r.epochs << ',' << InitArmName(r.arm) << ',' << r.pairs << ','
        << FormatDouble(r.seeded.accuracy_mean) << ',' << FormatDouble(r.seeded.accuracy_sd)
        << ',' << FormatDouble(r.seeded.f1_mean) << ',' << FormatDouble(r.seeded.f1_sd) << ','
        << FormatDouble(r.random.accuracy_mean) << ',' << FormatDouble(r.random.accuracy_sd)
        << ',' << FormatDouble(r.random.f1_mean) << ',' << FormatDouble(r.random.f1_sd) << ','
        << FormatDouble(r.accuracy_diff_mean) << ',' << FormatDouble(r.f1_diff_mean) << ','
        << FormatDouble(r.win_rate) << ',' << EscapeCsvField(r.status) << '\n';
  }
}

void WriteReportCsv(const std::vector<ComparisonRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  WriteReportCsv(rows, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

std::vector<TableRow> SummaryTable(const GridResult& grid) {
  // (model, arm, size, rate, epochs) -> accuracies, f1s; keys kept in
  // first-seen order.
  using Key = std::tuple<int, int, int, double, int>;
  std::vector<Key> order;
  std::map<Key, std::pair<std::vector<double>, std::vector<double>>> values;
  for (const auto& r : grid.records) {
    if (!r.ok()) continue;
    const Key key{static_cast<int>(r.model), static_cast<int>(r.arm), r.sample_size, r.tp_rate,
                  r.epochs};
    if (!values.count(key)) order.push_back(key);
    values[key].first.push_back(r.metrics.accuracy);
    values[key].second.push_back(r.metrics.f1);
  }
  // Group by init mode, then size, then rate and epochs.
  std::sort(order.begin(), order.end());
  std::vector<TableRow> rows;
  for (const Key& key : order) {
    TableRow row;
    row.model = static_cast<ModelKind>(std::get<0>(key));
    row.arm = static_cast<InitArm>(std::get<1>(key));
    row.sample_size = std::get<2>(key);
    row.label = "TP " + FormatDouble(std::get<3>(key)) + " epoch " +
                std::to_string(std::get<4>(key));
    row.accuracy = Mean(values[key].first);
    row.f1 = Mean(values[key].second);
    rows.push_back(row);
  }
  return rows;
}

void WriteSummaryTable(const std::vector<TableRow>& rows, std::ostream& out) {
  out << "model,init_mode,sample_size,row,accuracy,f1\n";
  for (const auto& r : rows) {
    out << ModelKindName(r.model) << ',' << InitArmName(r.arm) << ',' << r.sample_size << ','
        << r.label << ',' << FormatDouble(r.accuracy) << ',' << FormatDouble(r.f1) << '\n';
  }
}

}  // namespace crowdseed
