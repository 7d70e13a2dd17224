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

#ifndef CROWDSEED_GRID_H_
#define CROWDSEED_GRID_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "crowdseed/aggregate.h"
#include "crowdseed/checkpoint.h"
#include "crowdseed/dataset.h"
#include "crowdseed/metrics.h"
#include "crowdseed/profile_io.h"
#include "crowdseed/train_config.h"
#include "crowdseed/weight_seed.h"

namespace crowdseed {

// Starting weights of one grid arm.
enum class InitArm { kRandom, kBorda, kMc4, kKemeny };

// "random", "borda-seeded", "mc4-seeded", "kemeny-seeded".
std::string InitArmName(InitArm arm);
InitArm ParseInitArm(const std::string& name);
// Aggregator behind a seeded arm; "none" for random.
std::string ArmAggregatorName(InitArm arm);
AggregateMethod ArmMethod(InitArm arm);

struct GridConfig {
  std::vector<int> sample_sizes = {500, 1000, 1500, 2000};
  std::vector<double> tp_rates = {0.2, 0.4, 0.6, 0.8};
  std::vector<int> epoch_settings = {50, 200};
  std::vector<InitArm> init_modes = {InitArm::kRandom, InitArm::kBorda, InitArm::kMc4,
                                     InitArm::kKemeny};
  int repetitions = 20;
  uint64_t base_seed = 0;
  ModelKind model = ModelKind::kMlp;
  double train_fraction = 0.8;
  // Learning rate, batch size, L2, hidden sizes and jitter for every run.
  // Epochs, seed and init mode are set per cell.
  TrainConfig train;
  int jobs = 1;
  // Wall times make the results file non-reproducible, so they are only
  // recorded on request; otherwise wall_ms is 0.
  bool record_timing = false;

  void Validate() const;
  size_t ExpectedRecords() const;
};

struct GridRecord {
  ModelKind model = ModelKind::kMlp;
  InitArm arm = InitArm::kRandom;
  int sample_size = 0;
  double tp_rate = 0.0;
  int epochs = 0;
  int repetition = 0;
  // Training seed, shared by every arm of the same cell and repetition.
  uint64_t seed = 0;
  Metrics metrics;
  double wall_ms = 0.0;
  // "ok", "skipped: <reason>" or "error: <reason>".
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

struct GridResult {
  std::vector<GridRecord> records;

  size_t num_ok() const;
  size_t num_skipped() const;
};

// Train and test sides of one (sample size, tp rate, repetition) cell after
// scaling with statistics of the biased training sample.
struct CellData {
  Dataset train;
  Dataset test;
  ScalerParams scaler;
};

// Splits `data`, draws the biased training sample from the training side
// and standardizes both sides with the sample's statistics. The split
// depends only on (base seed, repetition).
CellData PrepareCell(const Dataset& data, const GridConfig& cfg, int sample_size, double tp_rate,
                     int repetition);

uint64_t CellTrainingSeed(const GridConfig& cfg, int sample_size, double tp_rate, int epochs,
                          int repetition);

// One seed vector per aggregation method, from the profile's rankings and
// majority directions.
std::map<AggregateMethod, SeedWeights> SeedsFromProfile(const ElicitedProfile& profile);

// Runs every (size, rate, epochs, arm, repetition) combination. `profile`
// may be null when only the random arm is requested. Infeasible cells are
// recorded as skipped.
GridResult RunGrid(const GridConfig& cfg, const Dataset& data, const ElicitedProfile* profile);

inline constexpr const char* kGridCsvHeader =
    "model,aggregator,init_mode,sample_size,tp_rate,epochs,repetition,seed,accuracy,f1,tp,fp,"
    "fn,tn,wall_ms,status";

void WriteGridCsv(const GridResult& result, std::ostream& out);
void WriteGridCsv(const GridResult& result, const std::string& path);
GridResult ReadGridCsv(const std::string& path);

}  // namespace crowdseed

#endif  // CROWDSEED_GRID_H_
