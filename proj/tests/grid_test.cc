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

#include "crowdseed/grid.h"

#include <sstream>

#include <gtest/gtest.h>

#include "crowdseed/report.h"
#include "crowdseed/synthetic.h"
#include "test_util.h"

namespace crowdseed {
namespace {

using ::crowdseed::testing::ReadFile;
using ::crowdseed::testing::TempDir;

SyntheticData SmallSynthetic() {
  SyntheticSpec spec = SyntheticSpec::WithDefaultWeights(4);
  spec.num_rows = 400;
  return GenerateSynthetic(spec, 5);
}

GridConfig SmallGrid() {
  GridConfig cfg;
  cfg.sample_sizes = {40, 60};
  cfg.tp_rates = {0.4, 0.6};
  cfg.epoch_settings = {2};
  cfg.init_modes = {InitArm::kRandom, InitArm::kKemeny};
  cfg.repetitions = 3;
  cfg.base_seed = 13;
  cfg.train.hidden_sizes = {6, 4};
  return cfg;
}

std::string GridCsv(const GridResult& result) {
  std::ostringstream out;
  WriteGridCsv(result, out);
  return out.str();
}

TEST(Grid, RecordCountAndOrder) {
  const SyntheticData syn = SmallSynthetic();
  const GridConfig cfg = SmallGrid();
  EXPECT_EQ(cfg.ExpectedRecords(), 24u);
  const GridResult result = RunGrid(cfg, syn.data, &syn.profile);
  ASSERT_EQ(result.records.size(), 24u);
  EXPECT_EQ(result.num_ok(), 24u);
  for (const auto& r : result.records) {
    EXPECT_EQ(r.metrics.total(), 80);  // 20% of 400 rows held out
    EXPECT_EQ(r.wall_ms, 0.0);
  }
}

TEST(Grid, PairedArmsShareTrainingSeed) {
  const SyntheticData syn = SmallSynthetic();
  const GridResult result = RunGrid(SmallGrid(), syn.data, &syn.profile);
  std::map<std::tuple<int, double, int>, uint64_t> seeds;
  for (const auto& r : result.records) {
    const auto key = std::make_tuple(r.sample_size, r.tp_rate, r.repetition);
    if (!seeds.count(key)) seeds[key] = r.seed;
    EXPECT_EQ(seeds[key], r.seed);
  }
  EXPECT_EQ(seeds.size(), 12u);
}

TEST(Grid, ReproducibleAcrossRunsAndThreadCounts) {
  const SyntheticData syn = SmallSynthetic();
  GridConfig cfg = SmallGrid();
  const std::string first = GridCsv(RunGrid(cfg, syn.data, &syn.profile));
  EXPECT_EQ(first, GridCsv(RunGrid(cfg, syn.data, &syn.profile)));
  cfg.jobs = 4;
  EXPECT_EQ(first, GridCsv(RunGrid(cfg, syn.data, &syn.profile)));
  cfg.base_seed = 14;
  EXPECT_NE(first, GridCsv(RunGrid(cfg, syn.data, &syn.profile)));
}

TEST(Grid, SvmModel) {
  const SyntheticData syn = SmallSynthetic();
  GridConfig cfg = SmallGrid();
  cfg.model = ModelKind::kSvm;
  cfg.epoch_settings = {20};
  const GridResult result = RunGrid(cfg, syn.data, &syn.profile);
  EXPECT_EQ(result.num_ok(), 24u);
  double mean = 0.0;
  for (const auto& r : result.records) mean += r.metrics.accuracy / 24;
  EXPECT_GT(mean, 0.7);
}

TEST(Grid, InfeasibleCellsAreSkipped) {
  const SyntheticData syn = SmallSynthetic();
  GridConfig cfg = SmallGrid();
  cfg.sample_sizes = {40, 5000};
  const GridResult result = RunGrid(cfg, syn.data, &syn.profile);
  ASSERT_EQ(result.records.size(), 24u);
  EXPECT_EQ(result.num_skipped(), 12u);
  EXPECT_EQ(result.num_ok(), 12u);
  for (const auto& r : result.records) {
    EXPECT_EQ(r.ok(), r.sample_size == 40) << r.status;
  }
}

TEST(Grid, SeededArmsNeedAProfile) {
  const SyntheticData syn = SmallSynthetic();
  EXPECT_THROW(RunGrid(SmallGrid(), syn.data, nullptr), Error);
  GridConfig random_only = SmallGrid();
  random_only.init_modes = {InitArm::kRandom};
  EXPECT_EQ(RunGrid(random_only, syn.data, nullptr).records.size(), 12u);
}

TEST(Grid, ConfigValidation) {
  GridConfig cfg = SmallGrid();
  cfg.tp_rates = {1.5};
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = SmallGrid();
  cfg.repetitions = 0;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = SmallGrid();
  cfg.train_fraction = 1.0;
  EXPECT_THROW(cfg.Validate(), Error);
}

TEST(PrepareCell, TestSideIsSharedAndScaledWithSampleStatistics) {
  const SyntheticData syn = SmallSynthetic();
  const GridConfig cfg = SmallGrid();
  const CellData a = PrepareCell(syn.data, cfg, 40, 0.4, 1);
  const CellData b = PrepareCell(syn.data, cfg, 60, 0.6, 1);
  EXPECT_EQ(a.train.rows(), 40);
  EXPECT_EQ(a.train.CountPositives(), 16);
  EXPECT_LT(a.train.features.colwise().mean().cwiseAbs().maxCoeff(), 1e-9);
  // Undoing each cell's own scaling recovers the same raw test rows.
  const Dataset raw_a = InvertScaler(a.test, a.scaler);
  const Dataset raw_b = InvertScaler(b.test, b.scaler);
  EXPECT_EQ(raw_a.labels, raw_b.labels);
  EXPECT_LT((raw_a.features - raw_b.features).cwiseAbs().maxCoeff(), 1e-12);
  // And those rows come from the original data, unsampled.
  int matched = 0;
  for (int r = 0; r < raw_a.rows(); ++r) {
    for (int s = 0; s < syn.data.rows(); ++s) {
      if ((syn.data.features.row(s) - raw_a.features.row(r)).cwiseAbs().maxCoeff() < 1e-12) {
        ++matched;
        break;
      }
    }
  }
  EXPECT_EQ(matched, raw_a.rows());
  EXPECT_NE(PrepareCell(syn.data, cfg, 40, 0.4, 2).test.labels, a.test.labels);
}

TEST(GridCsv, RoundTrip) {
  const SyntheticData syn = SmallSynthetic();
  GridConfig cfg = SmallGrid();
  cfg.sample_sizes = {40, 5000};
  const GridResult result = RunGrid(cfg, syn.data, &syn.profile);
  const std::string path = TempDir("grid_csv") + "/grid.csv";
  WriteGridCsv(result, path);
  const std::string text = ReadFile(path);
  EXPECT_EQ(text.substr(0, text.find('\n')), kGridCsvHeader);
  const GridResult back = ReadGridCsv(path);
  EXPECT_EQ(GridCsv(back), text);
}

TEST(Synthetic, PerfectUsersRecoverTheOracle) {
  SyntheticSpec spec = SyntheticSpec::WithDefaultWeights(6);
  spec.num_rows = 100;
  spec.perturbation_rate = 0.0;
  const SyntheticData syn = GenerateSynthetic(spec, 1);
  for (const auto& r : syn.profile.profile.rankings) EXPECT_EQ(r, syn.oracle);
  for (auto method :
       {AggregateMethod::kKemenyYoung, AggregateMethod::kMc4, AggregateMethod::kBorda}) {
    EXPECT_EQ(Aggregate(syn.profile.profile, method).ranking, syn.oracle);
  }
  const Eigen::VectorXi signs = ResolveDirections(syn.profile.Votes());
  for (int i = 0; i < 6; ++i) EXPECT_EQ(signs[i], spec.true_weights[i] > 0 ? 1 : -1);
}

TEST(Synthetic, NoiselessLabelsFollowThePlantedRule) {
  SyntheticSpec spec;
  spec.true_weights = Eigen::VectorXd::Unit(5, 0);
  spec.noise_scale = 0.0;
  spec.num_rows = 1000;
  const SyntheticData syn = GenerateSynthetic(spec, 2);
  for (int r = 0; r < syn.data.rows(); ++r) {
    EXPECT_EQ(syn.data.labels[r], syn.data.features(r, 0) > 0 ? 1 : 0);
  }
}

TEST(Synthetic, DefaultsAreBalanced) {
  const SyntheticData syn = GenerateSynthetic(SyntheticSpec::WithDefaultWeights(12), 3);
  EXPECT_EQ(syn.data.rows(), 6400);
  EXPECT_NEAR(syn.data.CountPositives() / 6400.0, 0.5, 0.02);
  EXPECT_EQ(syn.profile.profile.num_voters(), 5);
  EXPECT_EQ(syn.oracle.item_at(0), 0);
}

TEST(Synthetic, Deterministic) {
  SyntheticSpec spec = SyntheticSpec::WithDefaultWeights(5);
  spec.num_rows = 50;
  const SyntheticData a = GenerateSynthetic(spec, 7);
  const SyntheticData b = GenerateSynthetic(spec, 7);
  EXPECT_EQ(a.data.features, b.data.features);
  EXPECT_EQ(a.profile.profile.rankings, b.profile.profile.rankings);
}

GridRecord Record(InitArm arm, int rep, double accuracy, double f1) {
  GridRecord r;
  r.arm = arm;
  r.sample_size = 500;
  r.tp_rate = 0.4;
  r.epochs = 50;
  r.repetition = rep;
  r.metrics.accuracy = accuracy;
  r.metrics.f1 = f1;
  return r;
}

TEST(Report, PairedDifferencesAndWinRate) {
  GridResult grid;
  const double random_acc[] = {0.70, 0.60, 0.80, 0.75};
  const double seeded_acc[] = {0.72, 0.60, 0.78, 0.90};
  for (int rep = 0; rep < 4; ++rep) {
    grid.records.push_back(Record(InitArm::kRandom, rep, random_acc[rep], 0.5));
    grid.records.push_back(Record(InitArm::kKemeny, rep, seeded_acc[rep], 0.6));
  }
  const auto rows = SeededVsRandomReport(grid);
  ASSERT_EQ(rows.size(), 1u);
  const ComparisonRow& row = rows[0];
  EXPECT_EQ(row.pairs, 4);
  EXPECT_EQ(row.status, "ok");
  // Wins, tie, loss, win.
  EXPECT_DOUBLE_EQ(row.win_rate, 2.5 / 4);
  double diff = 0.0;
  for (int i = 0; i < 4; ++i) diff += seeded_acc[i] - random_acc[i];
  EXPECT_NEAR(row.accuracy_diff_mean, diff / 4, 1e-12);
  EXPECT_NEAR(row.f1_diff_mean, 0.1, 1e-12);
  EXPECT_NEAR(row.random.accuracy_mean, 0.7125, 1e-12);
  EXPECT_EQ(row.seeded.n, 4);
}

TEST(Report, AllTiesGiveOneHalf) {
  GridResult grid;
  for (int rep = 0; rep < 5; ++rep) {
    grid.records.push_back(Record(InitArm::kRandom, rep, 0.8, 0.7));
    grid.records.push_back(Record(InitArm::kBorda, rep, 0.8, 0.7));
  }
  EXPECT_DOUBLE_EQ(SeededVsRandomReport(grid)[0].win_rate, 0.5);
}

TEST(Report, MissingRandomCounterpart) {
  GridResult grid;
  grid.records.push_back(Record(InitArm::kMc4, 0, 0.8, 0.7));
  const auto rows = SeededVsRandomReport(grid);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "missing random counterpart");
}

TEST(Report, SummarizeUsesSampleStandardDeviation) {
  const ArmSummary s = Summarize({1, 2, 3, 4}, {0, 0, 1, 1});
  EXPECT_DOUBLE_EQ(s.accuracy_mean, 2.5);
  EXPECT_NEAR(s.accuracy_sd, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_EQ(Summarize({0.5}, {0.5}).accuracy_sd, 0.0);
}

TEST(Report, SummaryTableRows) {
  GridResult grid;
  for (int rep = 0; rep < 3; ++rep) {
    grid.records.push_back(Record(InitArm::kRandom, rep, 0.6 + 0.1 * rep, 0.5));
    grid.records.push_back(Record(InitArm::kKemeny, rep, 0.8, 0.7));
  }
  const auto table = SummaryTable(grid);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].arm, InitArm::kRandom);
  EXPECT_EQ(table[0].label, "TP 0.4 epoch 50");
  EXPECT_EQ(table[0].sample_size, 500);
  EXPECT_NEAR(table[0].accuracy, 0.7, 1e-12);
  std::ostringstream out;
  WriteSummaryTable(table, out);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "model,init_mode,sample_size,row,accuracy,f1");
}

}  // namespace
}  // namespace crowdseed
