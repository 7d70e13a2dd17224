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

#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "crowdseed/csv.h"
#include "crowdseed/error.h"
#include "crowdseed/mlp.h"
#include "crowdseed/random.h"
#include "crowdseed/svm.h"

namespace crowdseed {
namespace {

enum SeedTag : uint64_t { kSplitTag = 11, kSampleTag = 12, kTrainTag = 13 };

uint64_t RateBits(double rate) { return std::bit_cast<uint64_t>(rate); }

struct RunOutcome {
  Metrics metrics;
  double wall_ms = 0.0;
};

RunOutcome TrainAndEvaluate(const GridConfig& cfg, const CellData& cell, const TrainConfig& train) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome outcome;
  if (cfg.model == ModelKind::kSvm) {
    outcome.metrics = Evaluate(SvmTrain(cell.train, train), cell.test);
  } else {
    outcome.metrics = Evaluate(MlpTrain(cell.train, train), cell.test);
  }
  if (cfg.record_timing) {
    outcome.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  }
  return outcome;
}

}  // namespace

std::string InitArmName(InitArm arm) {
  switch (arm) {
    case InitArm::kRandom:
      return "random";
    case InitArm::kBorda:
      return "borda-seeded";
    case InitArm::kMc4:
      return "mc4-seeded";
    case InitArm::kKemeny:
      break;
  }
  return "kemeny-seeded";
}

InitArm ParseInitArm(const std::string& name) {
  if (name == "random") return InitArm::kRandom;
  if (name == "borda-seeded" || name == "borda") return InitArm::kBorda;
  if (name == "mc4-seeded" || name == "mc4") return InitArm::kMc4;
  if (name == "kemeny-seeded" || name == "kemeny" || name == "kemeny_young") {
    return InitArm::kKemeny;
  }
  throw Error("unknown init mode '" + name + "'");
}

AggregateMethod ArmMethod(InitArm arm) {
  switch (arm) {
    case InitArm::kBorda:
      return AggregateMethod::kBorda;
    case InitArm::kMc4:
      return AggregateMethod::kMc4;
    case InitArm::kKemeny:
      return AggregateMethod::kKemenyYoung;
    case InitArm::kRandom:
      break;
  }
  throw Error("the random arm has no aggregation method");
}

std::string ArmAggregatorName(InitArm arm) {
  return arm == InitArm::kRandom ? "none" : MethodName(ArmMethod(arm));
}

void GridConfig::Validate() const {
  CROWDSEED_CHECK(!sample_sizes.empty() && !tp_rates.empty() && !epoch_settings.empty() &&
                      !init_modes.empty(),
                  "every grid axis needs at least one value");
  CROWDSEED_CHECK(repetitions >= 1, "grid needs at least one repetition");
  CROWDSEED_CHECK(jobs >= 1, "jobs must be positive");
  for (int e : epoch_settings) CROWDSEED_CHECK(e >= 1, "epoch settings must be positive");
  for (int n : sample_sizes) CROWDSEED_CHECK(n >= 1, "sample sizes must be positive");
  for (double t : tp_rates) CROWDSEED_CHECK(t > 0.0 && t < 1.0, "tp rates must lie in (0, 1)");
  CROWDSEED_CHECK(train_fraction > 0.0 && train_fraction < 1.0,
                  "train fraction must lie in (0, 1)");
}

size_t GridConfig::ExpectedRecords() const {
  return sample_sizes.size() * tp_rates.size() * epoch_settings.size() * init_modes.size() *
         static_cast<size_t>(repetitions);
}

size_t GridResult::num_ok() const {
  size_t n = 0;
  for (const auto& r : records) n += r.ok();
  return n;
}

size_t GridResult::num_skipped() const {
  size_t n = 0;
  for (const auto& r : records) n += r.status.rfind("skipped", 0) == 0;
  return n;
}

CellData PrepareCell(const Dataset& data, const GridConfig& cfg, int sample_size, double tp_rate,
                     int repetition) {
  const auto [train_side, test_side] = TrainTestSplit(
      data, cfg.train_fraction,
      DeriveSeed(cfg.base_seed, {kSplitTag, static_cast<uint64_t>(repetition)}));
  SampleSpec spec;
  spec.size = sample_size;
  spec.tp_rate = tp_rate;
  spec.rng_seed = DeriveSeed(cfg.base_seed, {kSampleTag, static_cast<uint64_t>(sample_size),
                                             RateBits(tp_rate),
                                             static_cast<uint64_t>(repetition)});
  const Dataset sample = BiasedSample(train_side, spec);
  CellData cell;
  std::tie(cell.train, cell.scaler) = Standardize(sample);
  cell.test = ApplyScaler(test_side, cell.scaler);
  return cell;
}

uint64_t CellTrainingSeed(const GridConfig& cfg, int sample_size, double tp_rate, int epochs,
                          int repetition) {
  return DeriveSeed(cfg.base_seed,
                    {kTrainTag, static_cast<uint64_t>(sample_size), RateBits(tp_rate),
                     static_cast<uint64_t>(epochs), static_cast<uint64_t>(repetition)});
}

std::map<AggregateMethod, SeedWeights> SeedsFromProfile(const ElicitedProfile& profile) {
  const Eigen::VectorXi signs = ResolveDirections(profile.Votes());
  std::map<AggregateMethod, SeedWeights> seeds;
  for (AggregateMethod method :
       {AggregateMethod::kBorda, AggregateMethod::kMc4, AggregateMethod::kKemenyYoung}) {
    SeedWeights seed = SeedFromAggregate(Aggregate(profile.profile, method), signs);
    seed.feature_names = profile.feature_names;
    seeds.emplace(method, std::move(seed));
  }
  return seeds;
}

GridResult RunGrid(const GridConfig& cfg, const Dataset& data, const ElicitedProfile* profile) {
  cfg.Validate();
  std::map<AggregateMethod, SeedWeights> seeds;
  bool any_seeded = false;
  for (InitArm arm : cfg.init_modes) any_seeded |= arm != InitArm::kRandom;
  if (any_seeded) {
    CROWDSEED_CHECK(profile != nullptr, "seeded init modes need a ranking profile");
    CROWDSEED_CHECK(profile->feature_names == data.schema.feature_names,
                    "profile features do not match the dataset schema");
    seeds = SeedsFromProfile(*profile);
  }

  const size_t n_sizes = cfg.sample_sizes.size();
  const size_t n_rates = cfg.tp_rates.size();
  const size_t n_epochs = cfg.epoch_settings.size();
  const size_t n_arms = cfg.init_modes.size();
  const size_t n_reps = cfg.repetitions;
  // Records are laid out size-major, repetition-minor.
  auto record_index = [&](size_t s, size_t t, size_t e, size_t a, size_t r) {
    return (((s * n_rates + t) * n_epochs + e) * n_arms + a) * n_reps + r;
  };

  GridResult result;
  result.records.resize(cfg.ExpectedRecords());
  const size_t n_units = n_sizes * n_rates * n_reps;

  // Each unit is one (size, rate, repetition) cell and owns its records.
  auto run_unit = [&](size_t unit) {
    const size_t r = unit % n_reps;
    const size_t t = (unit / n_reps) % n_rates;
    const size_t s = unit / (n_reps * n_rates);
    const int size = cfg.sample_sizes[s];
    const double rate = cfg.tp_rates[t];
    const int rep = static_cast<int>(r);

    std::string cell_status = "ok";
    CellData cell;
    try {
      cell = PrepareCell(data, cfg, size, rate, rep);
    } catch (const Error& e) {
      cell_status = std::string("skipped: ") + e.what();
    }
    for (size_t e = 0; e < n_epochs; ++e) {
      const int epochs = cfg.epoch_settings[e];
      for (size_t a = 0; a < n_arms; ++a) {
        GridRecord& rec = result.records[record_index(s, t, e, a, r)];
        rec.model = cfg.model;
        rec.arm = cfg.init_modes[a];
        rec.sample_size = size;
        rec.tp_rate = rate;
        rec.epochs = epochs;
        rec.repetition = rep;
        rec.seed = CellTrainingSeed(cfg, size, rate, epochs, rep);
        rec.status = cell_status;
        if (cell_status != "ok") continue;
        TrainConfig train = cfg.train;
        train.epochs = epochs;
        train.rng_seed = rec.seed;
        if (rec.arm == InitArm::kRandom) {
          train.init_mode = InitMode::kRandom;
          train.seed.reset();
        } else {
          train.init_mode = InitMode::kSeeded;
          train.seed = seeds.at(ArmMethod(rec.arm));
        }
        try {
          const RunOutcome outcome = TrainAndEvaluate(cfg, cell, train);
          rec.metrics = outcome.metrics;
          rec.wall_ms = outcome.wall_ms;
        } catch (const Error& err) {
          rec.status = std::string("error: ") + err.what();
        }
      }
    }
  };

  const int workers = static_cast<int>(std::min<size_t>(cfg.jobs, n_units));
  if (workers <= 1) {
    for (size_t u = 0; u < n_units; ++u) run_unit(u);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t u = next++; u < n_units; u = next++) run_unit(u);
      });
    }
    for (auto& th : pool) th.join();
  }
  return result;
}

void WriteGridCsv(const GridResult& result, std::ostream& out) {
  out << kGridCsvHeader << '\n';
  for (const auto& r : result.records) {
    out << ModelKindName(r.model) << ',' << ArmAggregatorName(r.arm) << ','
        << (r.arm == InitArm::kRandom ? "random" : "seeded") << ',' << r.sample_size << ','
        << FormatDouble(r.tp_rate) << ',' << r.epochs << ',' << r.repetition << ',' << r.seed
        << ',' << FormatDouble(r.metrics.accuracy) << ',' << FormatDouble(r.metrics.f1) << ','
        << r.metrics.tp << ',' << r.metrics.fp << ',' << r.metrics.fn << ',' << r.metrics.tn
        << ',' << FormatDouble(r.wall_ms) << ',' << EscapeCsvField(r.status) << '\n';
  }
}

void WriteGridCsv(const GridResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  WriteGridCsv(result, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

GridResult ReadGridCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string record;
  CROWDSEED_CHECK(ReadCsvRecord(in, &record) && record == kGridCsvHeader,
                  path + ": not a grid results file");
  GridResult result;
  int line = 1;
  while (ReadCsvRecord(in, &record)) {
    ++line;
    if (record.empty()) continue;
    const auto f = SplitCsvLine(record);
    CROWDSEED_CHECK(f.size() == 16, path + ": row " + std::to_string(line) + " has " +
                                        std::to_string(f.size()) + " fields, expected 16");
    try {
      GridRecord r;
      r.model = ParseModelKind(f[0]);
      r.arm = f[2] == "random" ? InitArm::kRandom : ParseInitArm(f[1]);
      r.sample_size = std::stoi(f[3]);
      r.tp_rate = std::stod(f[4]);
      r.epochs = std::stoi(f[5]);
      r.repetition = std::stoi(f[6]);
      r.seed = std::stoull(f[7]);
      r.metrics = Metrics::FromConfusion(std::stol(f[10]), std::stol(f[11]), std::stol(f[12]),
                                         std::stol(f[13]));
      r.wall_ms = std::stod(f[14]);
      r.status = f[15];
      result.records.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw Error(path + ": row " + std::to_string(line) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace crowdseed
