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

#include "commands.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>

#include "crowdseed/aggregate.h"
#include "crowdseed/attribution.h"
#include "crowdseed/checkpoint.h"
#include "crowdseed/csv.h"
#include "crowdseed/dataset.h"
#include "crowdseed/error.h"
#include "crowdseed/grid.h"
#include "crowdseed/mlp.h"
#include "crowdseed/profile_io.h"
#include "crowdseed/random.h"
#include "crowdseed/report.h"
#include "crowdseed/svm.h"
#include "crowdseed/synthetic.h"
#include "crowdseed/weight_seed.h"

namespace crowdseed::cli {
namespace {

// Stream tags for seeds derived from --seed.
constexpr uint64_t kRowsTag = 0xe11c;
constexpr uint64_t kSplitTag = 0x5971;

FeatureSchema SchemaFor(const std::string& data, const std::vector<std::string>& features,
                        const std::string& label) {
  if (features.empty()) return InferSchema(data, label);
  FeatureSchema schema{features, label};
  schema.Validate();
  return schema;
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t\r") + 1);
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// "name=+1" / "name=-1".
std::pair<std::string, int> ParseDirection(const std::string& text) {
  const size_t eq = text.find('=');
  CROWDSEED_CHECK(eq != std::string::npos && eq > 0,
                  "direction '" + text + "' must look like name=+1 or name=-1");
  const std::string value = text.substr(eq + 1);
  int sign = 0;
  if (value == "+1" || value == "1") sign = 1;
  if (value == "-1") sign = -1;
  CROWDSEED_CHECK(sign != 0, "direction for '" + text.substr(0, eq) + "' must be +1 or -1");
  return {text.substr(0, eq), sign};
}

// Two-column CSV: feature,definition.
std::map<std::string, std::string> LoadDefinitions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::map<std::string, std::string> defs;
  std::string record;
  bool header = true;
  while (ReadCsvRecord(in, &record)) {
    if (record.empty()) continue;
    const auto fields = SplitCsvLine(record);
    CROWDSEED_CHECK(fields.size() == 2, path + ": expected feature,definition");
    if (header) {
      header = false;
      if (fields[0] == "feature") continue;
    }
    defs[fields[0]] = fields[1];
  }
  return defs;
}

void PrintRows(const Dataset& ds, const std::vector<int>& rows) {
  std::cout << "row";
  for (const auto& name : ds.schema.feature_names) std::cout << '\t' << name;
  std::cout << '\t' << ds.schema.label_name << '\n';
  for (int r : rows) {
    std::cout << r;
    for (int j = 0; j < ds.num_features(); ++j) std::cout << '\t' << ds.features(r, j);
    std::cout << '\t' << ds.labels[r] << '\n';
  }
}

// Reads lines until `parse` accepts one; EOF is an error.
template <typename T, typename Parse>
T Prompt(const std::string& question, Parse parse) {
  std::string line;
  while (true) {
    std::cout << question << std::flush;
    if (!std::getline(std::cin, line)) throw Error("input ended before the answer was complete");
    try {
      return parse(line);
    } catch (const Error& e) {
      std::cout << "  " << e.what() << "; try again.\n";
    }
  }
}

void PrintRanking(const AggregateResult& result, const SeedWeights& seed,
                  const std::vector<std::string>& names) {
  std::cout << MethodName(result.method) << " ranking:\n";
  for (int p = 0; p < result.ranking.size(); ++p) {
    const int item = result.ranking.item_at(p);
    std::cout << "  " << std::setw(2) << p + 1 << ". " << names[item]
              << "  score=" << FormatDouble(result.scores[item])
              << "  weight=" << FormatDouble(seed.values[item]) << '\n';
  }
  if (result.cost) std::cout << "Kendall distance to profile: " << *result.cost << '\n';
}

void PrintMetrics(const std::string& what, const Metrics& m) {
  std::cout << what << ": accuracy=" << FormatDouble(m.accuracy) << " f1=" << FormatDouble(m.f1)
            << " tp=" << m.tp << " fp=" << m.fp << " fn=" << m.fn << " tn=" << m.tn << '\n';
}

CLI::Option* AddSeedFlag(CLI::App* sub, uint64_t* seed) {
  return sub->add_option("--seed", *seed, "64-bit seed for every random choice")
      ->capture_default_str();
}

const auto kMethods = CLI::IsMember({"kemeny", "kemeny_young", "mc4", "borda"});

}  // namespace

void AddElicit(CLI::App& app) {
  struct Options {
    std::string data, label = "label", profile, user, ranking, definitions;
    std::vector<std::string> features, directions;
    int rows = 20;
    uint64_t seed = 0;
  };
  auto opt = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand("elicit", "Show sample rows and record one user's ranking");
  sub->add_option("--data", opt->data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--features", opt->features, "Feature columns (default: all but the label)")
      ->delimiter(',');
  sub->add_option("--label", opt->label, "Label column")->capture_default_str();
  sub->add_option("--rows", opt->rows, "Rows to display")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  AddSeedFlag(sub, &opt->seed);
  sub->add_option("--profile", opt->profile, "Profile file to append to")->required();
  sub->add_option("--user", opt->user, "User id")->required();
  sub->add_option("--ranking", opt->ranking,
                  "Comma-separated features, most important first (skips the prompt)");
  sub->add_option("--directions", opt->directions,
                  "name=+1 or name=-1 per feature; unlisted features count as +1")
      ->delimiter(',');
  sub->add_option("--definitions", opt->definitions, "CSV of feature,definition")
      ->check(CLI::ExistingFile);
  sub->callback([opt] {
    const Dataset ds = LoadCsv(opt->data, SchemaFor(opt->data, opt->features, opt->label));
    CROWDSEED_CHECK(opt->rows <= ds.rows(), "--rows " + std::to_string(opt->rows) +
                                                " exceeds the " + std::to_string(ds.rows()) +
                                                " rows in the dataset");
    const auto& names = ds.schema.feature_names;
    if (!opt->definitions.empty()) {
      const auto defs = LoadDefinitions(opt->definitions);
      std::cout << "Feature definitions:\n";
      for (const auto& name : names) {
        const auto it = defs.find(name);
        std::cout << "  " << name << ": " << (it == defs.end() ? "(no definition)" : it->second)
                  << '\n';
      }
    }
    std::vector<int> rows(ds.rows());
    std::iota(rows.begin(), rows.end(), 0);
    Rng rng(DeriveSeed(opt->seed, {kRowsTag}));
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(opt->rows);
    PrintRows(ds, rows);

    ProfileEntry entry;
    entry.user_id = opt->user;
    if (!opt->ranking.empty()) {
      entry.ranking = SplitList(opt->ranking);
      RankingFromNames(entry.ranking, names);
      for (const auto& d : opt->directions) entry.directions.push_back(ParseDirection(d));
      DirectionsFromPairs(entry.directions, names);
    } else {
      std::cout << "Features: " << Join(names, ", ") << '\n';
      entry.ranking = Prompt<std::vector<std::string>>(
          "Rank all features in decreasing order of importance (comma-separated): ",
          [&](const std::string& line) {
            auto ranking = SplitList(line);
            RankingFromNames(ranking, names);
            return ranking;
          });
      for (const auto& name : names) {
        entry.directions.emplace_back(
            name, Prompt<int>("Does a larger " + name +
                                  " push towards label 1 (+1) or label 0 (-1)? [+1]: ",
                              [&](const std::string& line) {
                                return line.empty() ? 1 : ParseDirection(name + "=" + line).second;
                              }));
      }
    }
    AppendProfileEntry(opt->profile, names, entry);
    std::cout << "Recorded ranking for '" << opt->user << "' in " << opt->profile << '\n';
  });
}

void AddAggregate(CLI::App& app) {
  struct Options {
    std::string profile, method = "kemeny", out;
    uint64_t seed = 0;
  };
  auto opt = std::make_shared<Options>();
  CLI::App* sub =
      app.add_subcommand("aggregate", "Aggregate a ranking profile into seed weights");
  sub->add_option("--profile", opt->profile, "Profile file")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--method", opt->method, "kemeny, mc4 or borda")
      ->capture_default_str()
      ->check(kMethods);
  sub->add_option("--out", opt->out, "Seed weight file to write")->required();
  AddSeedFlag(sub, &opt->seed);
  sub->callback([opt] {
    const ElicitedProfile profile = LoadProfile(opt->profile);
    const AggregateResult result = Aggregate(profile.profile, ParseMethod(opt->method));
    SeedWeights seed = SeedFromAggregate(result, ResolveDirections(profile.Votes()));
    seed.feature_names = profile.feature_names;
    SaveSeedWeights(seed, opt->out);
    PrintRanking(result, seed, profile.feature_names);
    std::cout << "Wrote " << opt->out << '\n';
  });
}

void AddSeed(CLI::App& app) {
  struct Options {
    std::vector<std::string> features;
    std::vector<double> scores;
    std::vector<int> signs;
    std::string out;
    uint64_t seed = 0;
  };
  auto opt = std::make_shared<Options>();
  CLI::App* sub =
      app.add_subcommand("seed", "Turn per-feature importance scores into seed weights");
  sub->add_option("--features", opt->features, "Feature names")->required()->delimiter(',');
  sub->add_option("--scores", opt->scores, "Importance score per feature")
      ->required()
      ->delimiter(',');
  sub->add_option("--signs", opt->signs, "+1 or -1 per feature (default all +1)")
      ->delimiter(',')
      ->check(CLI::IsMember({-1, 1}));
  sub->add_option("--out", opt->out, "Seed weight file to write")->required();
  AddSeedFlag(sub, &opt->seed);
  sub->callback([opt] {
    const size_t n = opt->features.size();
    CROWDSEED_CHECK(opt->scores.size() == n, "--scores has " + std::to_string(opt->scores.size()) +
                                                 " values for " + std::to_string(n) +
                                                 " features");
    if (opt->signs.empty()) opt->signs.assign(n, 1);
    CROWDSEED_CHECK(opt->signs.size() == n, "--signs has " + std::to_string(opt->signs.size()) +
                                                " values for " + std::to_string(n) +
                                                " features");
    SeedWeights seed = SeedFromScores(
        Eigen::Map<const Eigen::VectorXd>(opt->scores.data(), static_cast<Eigen::Index>(n)),
        Eigen::Map<const Eigen::VectorXi>(opt->signs.data(), static_cast<Eigen::Index>(n)));
    seed.feature_names = opt->features;
    seed.provenance = "scores";
    SaveSeedWeights(seed, opt->out);
    for (size_t i = 0; i < n; ++i) {
      std::cout << opt->features[i] << '\t' << FormatDouble(seed.values[i]) << '\n';
    }
  });
}

void AddTrain(CLI::App& app) {
  struct Options {
    std::string data, label = "label", model = "mlp", init = "random", weights, out;
    std::vector<std::string> features;
    std::vector<int> hidden = {12, 10, 8};
    int epochs = 50, batch = 32, sample_size = 0;
    double lr = 0.01, lambda = 1e-3, tp_rate = 0.5, train_fraction = 0.8;
    uint64_t seed = 0;
  };
  auto opt = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand("train", "Train an MLP or linear SVM and save a checkpoint");
  sub->add_option("--data", opt->data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--features", opt->features, "Feature columns (default: all but the label)")
      ->delimiter(',');
  sub->add_option("--label", opt->label, "Label column")->capture_default_str();
  sub->add_option("--model", opt->model, "mlp or svm")
      ->capture_default_str()
      ->check(CLI::IsMember({"mlp", "svm"}));
  sub->add_option("--init", opt->init, "random or seeded")
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "seeded"}));
  sub->add_option("--weights", opt->weights, "Seed weight file (required with --init seeded)")
      ->check(CLI::ExistingFile);
  sub->add_option("--epochs", opt->epochs)->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--lr", opt->lr, "Learning rate")->capture_default_str();
  sub->add_option("--batch", opt->batch, "Mini-batch size")->capture_default_str();
  sub->add_option("--lambda", opt->lambda, "SVM L2 coefficient")->capture_default_str();
  sub->add_option("--hidden", opt->hidden, "MLP hidden layer widths")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--sample-size", opt->sample_size,
                  "Draw a class-skewed training sample of this size (0: whole split)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--tp-rate", opt->tp_rate, "Positive fraction of the training sample")
      ->capture_default_str();
  sub->add_option("--train-fraction", opt->train_fraction)->capture_default_str();
  sub->add_option("--out", opt->out, "Checkpoint file to write")->required();
  AddSeedFlag(sub, &opt->seed);
  sub->callback([opt] {
    const Dataset ds = LoadCsv(opt->data, SchemaFor(opt->data, opt->features, opt->label));
    CellData cell;
    if (opt->sample_size > 0) {
      GridConfig grid;
      grid.base_seed = opt->seed;
      grid.train_fraction = opt->train_fraction;
      cell = PrepareCell(ds, grid, opt->sample_size, opt->tp_rate, 0);
    } else {
      CROWDSEED_CHECK(opt->train_fraction > 0.0 && opt->train_fraction < 1.0,
                      "--train-fraction must lie in (0, 1)");
      auto [train, test] = TrainTestSplit(ds, opt->train_fraction, DeriveSeed(opt->seed, {kSplitTag}));
      std::tie(cell.train, cell.scaler) = Standardize(train);
      cell.test = ApplyScaler(test, cell.scaler);
    }

    Checkpoint ckpt;
    ckpt.kind = ParseModelKind(opt->model);
    ckpt.schema = ds.schema;
    ckpt.scaler = cell.scaler;
    TrainConfig& cfg = ckpt.config;
    cfg.epochs = opt->epochs;
    cfg.learning_rate = opt->lr;
    cfg.batch_size = opt->batch;
    cfg.l2 = opt->lambda;
    cfg.hidden_sizes = opt->hidden;
    cfg.rng_seed = opt->seed;
    if (opt->init == "seeded") {
      if (opt->weights.empty()) throw CLI::ValidationError("--weights", "required with --init seeded");
      cfg.init_mode = InitMode::kSeeded;
      cfg.seed = LoadSeedWeights(opt->weights, ds.schema.feature_names);
    }
    Metrics train_metrics, test_metrics;
    if (ckpt.kind == ModelKind::kSvm) {
      ckpt.svm = SvmTrain(cell.train, cfg);
      train_metrics = Evaluate(*ckpt.svm, cell.train);
      test_metrics = Evaluate(*ckpt.svm, cell.test);
    } else {
      ckpt.mlp = MlpTrain(cell.train, cfg);
      train_metrics = Evaluate(*ckpt.mlp, cell.train);
      test_metrics = Evaluate(*ckpt.mlp, cell.test);
    }
    SaveCheckpoint(ckpt, opt->out);
    std::cout << opt->model << " (" << opt->init << " init), " << cell.train.rows()
              << " training rows, " << cell.test.rows() << " test rows\n";
    PrintMetrics("train", train_metrics);
    PrintMetrics("test", test_metrics);
    std::cout << "Wrote " << opt->out << '\n';
  });
}

void AddExplain(CLI::App& app) {
  struct Options {
    std::string model, data, method = "layer", out;
    int layer = 1, steps = 50;
    uint64_t seed = 0;
  };
  auto opt = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "explain", "Dataset-average attributions of an MLP checkpoint (zero baseline after scaling)");
  sub->add_option("--model", opt->model, "Checkpoint file")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--data", opt->data, "CSV with the checkpoint's columns")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--layer", opt->layer, "Hidden layer, counted from 1")->capture_default_str();
  sub->add_option("--steps", opt->steps, "Integration steps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--method", opt->method, "ig, conductance, layer or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"ig", "conductance", "layer", "all"}));
  sub->add_option("--out", opt->out, "Attribution CSV to write")->required();
  AddSeedFlag(sub, &opt->seed);
  sub->callback([opt] {
    const Checkpoint ckpt = LoadCheckpoint(opt->model);
    CROWDSEED_CHECK(ckpt.kind == ModelKind::kMlp && ckpt.mlp,
                    "explain needs an MLP checkpoint; for an SVM the weights are the importances");
    const Dataset ds = ApplyScaler(LoadCsv(opt->data, ckpt.schema), ckpt.scaler);
    const AttributionResult result =
        DatasetAverageAttributions(*ckpt.mlp, opt->layer, ds, {{}, opt->steps});
    WriteAttributionTable(result, ckpt.schema.feature_names, ParseAttributionTable(opt->method),
                          opt->out);
    std::vector<int> order(result.combined.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(result.combined[a]) > std::abs(result.combined[b]);
    });
    std::cout << "Layer " << opt->layer << " feature importance over " << ds.rows()
              << " rows:\n";
    for (int i : order) {
      std::cout << "  " << ckpt.schema.feature_names[i] << '\t'
                << FormatDouble(result.combined[i]) << '\n';
    }
    std::cout << "Mean completeness gap " << FormatDouble(result.completeness_gap)
              << ", conservation gap " << FormatDouble(result.conservation_gap) << '\n';
    std::cout << "Wrote " << opt->out << '\n';
  });
}

void AddGrid(CLI::App& app) {
  struct Options {
    GridConfig grid;
    std::string data, label = "label", profile, model = "mlp", out, report, table;
    std::vector<std::string> features, init = {"random", "borda-seeded", "mc4-seeded",
                                               "kemeny-seeded"};
  };
  auto opt = std::make_shared<Options>();
  opt->grid.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  GridConfig& g = opt->grid;
  CLI::App* sub = app.add_subcommand("grid", "Run the seeded-vs-random experiment grid");
  sub->add_option("--data", opt->data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--features", opt->features, "Feature columns (default: all but the label)")
      ->delimiter(',');
  sub->add_option("--label", opt->label, "Label column")->capture_default_str();
  sub->add_option("--profile", opt->profile, "Profile file (needed for seeded arms)")
      ->check(CLI::ExistingFile);
  sub->add_option("--model", opt->model, "mlp or svm")
      ->capture_default_str()
      ->check(CLI::IsMember({"mlp", "svm"}));
  sub->add_option("--sizes", g.sample_sizes, "Training sample sizes")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--tp-rates", g.tp_rates, "Positive fractions of the sample")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--epochs", g.epoch_settings, "Epoch settings")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--init", opt->init, "Arms: random, borda-seeded, mc4-seeded, kemeny-seeded")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "borda-seeded", "mc4-seeded", "kemeny-seeded"}));
  sub->add_option("--reps", g.repetitions, "Repetitions per cell")->capture_default_str();
  sub->add_option("--train-fraction", g.train_fraction)->capture_default_str();
  sub->add_option("--lr", g.train.learning_rate, "Learning rate")->capture_default_str();
  sub->add_option("--batch", g.train.batch_size, "Mini-batch size")->capture_default_str();
  sub->add_option("--lambda", g.train.l2, "SVM L2 coefficient")->capture_default_str();
  sub->add_option("--jobs", g.jobs, "Worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--timing", g.record_timing, "Record wall times (output no longer reproducible)");
  sub->add_option("--out", opt->out, "Results CSV")->required();
  sub->add_option("--report", opt->report, "Seeded-vs-random comparison CSV");
  sub->add_option("--table", opt->table, "Summary table CSV");
  AddSeedFlag(sub, &g.base_seed);
  sub->callback([opt] {
    GridConfig& g = opt->grid;
    g.model = ParseModelKind(opt->model);
    g.init_modes.clear();
    for (const auto& name : opt->init) g.init_modes.push_back(ParseInitArm(name));
    const Dataset ds = LoadCsv(opt->data, SchemaFor(opt->data, opt->features, opt->label));
    std::optional<ElicitedProfile> profile;
    if (!opt->profile.empty()) profile = LoadProfile(opt->profile, ds.schema.feature_names);
    const GridResult result = RunGrid(g, ds, profile ? &*profile : nullptr);
    WriteGridCsv(result, opt->out);
    const auto rows = SeededVsRandomReport(result);
    if (!opt->report.empty()) WriteReportCsv(rows, opt->report);
    if (!opt->table.empty()) {
      std::ofstream out(opt->table);
      if (!out) throw Error("cannot write '" + opt->table + "'");
      WriteSummaryTable(SummaryTable(result), out);
    }
    std::cout << result.records.size() << " runs: " << result.num_ok() << " ok, "
              << result.num_skipped() << " skipped, "
              << result.records.size() - result.num_ok() - result.num_skipped() << " failed\n";
    for (const auto& r : rows) {
      if (r.status != "ok") continue;
      std::cout << "  " << InitArmName(r.arm) << " size " << r.sample_size << " TP "
                << FormatDouble(r.tp_rate) << " epochs " << r.epochs << ": accuracy "
                << FormatDouble(r.seeded.accuracy_mean) << " vs random "
                << FormatDouble(r.random.accuracy_mean) << ", win rate "
                << FormatDouble(r.win_rate) << '\n';
    }
    std::cout << "Wrote " << opt->out << '\n';
  });
}

void AddSynth(CLI::App& app) {
  struct Options {
    int features = 12;
    SyntheticSpec spec;
    std::string out_data, out_profile;
    uint64_t seed = 0;
  };
  auto opt = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "synth", "Generate a planted linear dataset and a simulated volunteer profile");
  sub->add_option("--features", opt->features, "Feature count")
      ->capture_default_str()
      ->check(CLI::Range(2, kMaxKemenyItems));
  sub->add_option("--rows", opt->spec.num_rows)->capture_default_str();
  sub->add_option("--noise", opt->spec.noise_scale, "Label noise scale")->capture_default_str();
  sub->add_option("--users", opt->spec.num_users, "Simulated volunteers")->capture_default_str();
  sub->add_option("--perturbation", opt->spec.perturbation_rate,
                  "Per-swap and per-direction error rate of the volunteers")
      ->capture_default_str();
  sub->add_option("--out-data", opt->out_data, "Dataset CSV to write")->required();
  sub->add_option("--out-profile", opt->out_profile, "Profile file to write");
  AddSeedFlag(sub, &opt->seed);
  sub->callback([opt] {
    SyntheticSpec spec = SyntheticSpec::WithDefaultWeights(opt->features);
    spec.num_rows = opt->spec.num_rows;
    spec.noise_scale = opt->spec.noise_scale;
    spec.num_users = opt->spec.num_users;
    spec.perturbation_rate = opt->spec.perturbation_rate;
    const SyntheticData syn = GenerateSynthetic(spec, opt->seed);
    WriteCsv(syn.data, opt->out_data);
    if (!opt->out_profile.empty()) SaveProfile(syn.profile, opt->out_profile);
    std::vector<std::string> oracle;
    for (int item : syn.oracle.order()) oracle.push_back(syn.data.schema.feature_names[item]);
    std::cout << syn.data.rows() << " rows, " << syn.data.CountPositives() << " positive\n"
              << "True importance order: " << Join(oracle, ", ") << '\n';
  });
}

}  // namespace crowdseed::cli
