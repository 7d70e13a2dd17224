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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
//
// Usage: acceptance_suite <path to crowdseed binary> <scratch dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "crowdseed/aggregate.h"
#include "crowdseed/attribution.h"
#include "crowdseed/grid.h"
#include "crowdseed/metrics.h"
#include "crowdseed/mlp.h"
#include "crowdseed/report.h"
#include "crowdseed/synthetic.h"
#include "crowdseed/weight_seed.h"
#include "metric_cases.h"
#include "test_util.h"

namespace crowdseed {
namespace {

using ::crowdseed::testing::RandomProfile;
using ::crowdseed::testing::RandomRanking;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::string Seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

// 1. Held-Karp Kemeny vs brute force on random small profiles.
Outcome KemenyOracle() {
  Rng rng(101);
  int cases = 0, matched = 0;
  for (int f = 3; f <= 7; ++f) {
    for (int h = 1; h <= 9; ++h) {
      for (int t = 0; t < 23; ++t) {
        const RankingProfile p = RandomProfile(f, h, rng);
        const AggregateResult dp = KemenyYoung(p);
        const AggregateResult bf = KemenyBruteForce(p);
        ++cases;
        matched += dp.ranking == bf.ranking && dp.cost == bf.cost;
      }
    }
  }
  return {cases >= 1000 && matched == cases,
          std::to_string(matched) + "/" + std::to_string(cases) + " profiles agree"};
}

// 2. F = 12, H = 5: the optimum is no worse than 10,000 random candidates.
Outcome KemenyAtScale() {
  Rng rng(102);
  constexpr int kTrials = 20;
  int ok = 0;
  long min_slack = std::numeric_limits<long>::max();
  for (int t = 0; t < kTrials; ++t) {
    const RankingProfile p = RandomProfile(12, 5, rng);
    const long cost = *KemenyYoung(p).cost;
    long best_random = std::numeric_limits<long>::max();
    for (int c = 0; c < 10000; ++c) {
      best_random = std::min(best_random, ProfileDistance(RandomRanking(12, rng), p));
    }
    ok += cost <= best_random;
    min_slack = std::min(min_slack, best_random - cost);
  }
  return {ok == kTrials, std::to_string(ok) + "/" + std::to_string(kTrials) +
                             " trials optimal; smallest margin over random search " +
                             std::to_string(min_slack)};
}

// 3. MC4 unanimity, row-stochastic transitions, probability-vector iterates.
Outcome Mc4Sanity() {
  Rng rng(103);
  int unanimous_ok = 0, trials = 0;
  double worst_row = 0.0, worst_mass = 0.0, most_negative = 0.0;
  for (int t = 0; t < 300; ++t) {
    const int f = 2 + t % 19;
    const Ranking r = RandomRanking(f, rng);
    unanimous_ok += Mc4(MakeProfile(std::vector<Ranking>(1 + t % 5, r))).ranking == r;
    const RankingProfile p = RandomProfile(f, 1 + t % 9, rng);
    const Eigen::MatrixXd m = Mc4TransitionMatrix(p);
    worst_row = std::max(worst_row, (m.rowwise().sum().array() - 1.0).abs().maxCoeff());
    most_negative = std::min(most_negative, m.minCoeff());
    std::vector<Eigen::VectorXd> trace;
    Mc4(p, {}, &trace);
    for (const auto& v : trace) {
      worst_mass = std::max(worst_mass, std::abs(v.sum() - 1.0));
      most_negative = std::min(most_negative, v.minCoeff());
    }
    ++trials;
  }
  std::ostringstream d;
  d << unanimous_ok << "/" << trials << " unanimous profiles reproduced; max |row sum - 1| "
    << worst_row << "; max |mass - 1| " << worst_mass << "; min entry " << most_negative;
  return {unanimous_ok == trials && worst_row <= 1e-12 && worst_mass <= 1e-9 &&
              most_negative >= 0.0,
          d.str()};
}

// 4. Seed weights: range, endpoints, affine invariance, worked examples.
Outcome Algorithm1Contract() {
  bool examples = SeedFromScores(Eigen::Vector3d(2, 4, 6), Eigen::Vector3i(1, 1, 1)).values ==
                      Eigen::Vector3d(-1, 0, 1) &&
                  SeedFromScores(Eigen::Vector3d(3, 2, 1), Eigen::Vector3i(1, 1, -1)).values ==
                      Eigen::Vector3d(1, 0.5, -1);
  const SeedWeights flat = SeedFromScores(Eigen::Vector3d(2, 2, 2), Eigen::Vector3i(1, 1, 1));
  examples = examples && flat.degenerate && flat.values.isZero(0.0);
  Rng rng(104);
  std::uniform_real_distribution<double> u(-100, 100), a(0.01, 100);
  int range_ok = 0, affine_ok = 0;
  constexpr int kTrials = 2000;
  for (int t = 0; t < kTrials; ++t) {
    const int f = 2 + t % 19;
    Eigen::VectorXd s(f);
    Eigen::VectorXi signs(f);
    for (int i = 0; i < f; ++i) {
      s[i] = u(rng);
      signs[i] = rng() % 2 ? 1 : -1;
    }
    const Eigen::VectorXd w = SeedFromScores(s, signs).values;
    range_ok += w.minCoeff() == -1.0 && w.maxCoeff() == 1.0;
    const Eigen::VectorXd shifted = (a(rng) * s.array() + u(rng)).matrix();
    const Eigen::VectorXi plus = Eigen::VectorXi::Ones(f);
    affine_ok += (SeedFromScores(shifted, plus).values - SeedFromScores(s, plus).values)
                     .cwiseAbs()
                     .maxCoeff() <= 1e-12;
  }
  std::ostringstream d;
  d << "worked examples " << (examples ? "exact" : "MISMATCH") << "; endpoints attained "
    << range_ok << "/" << kTrials << "; affine invariant " << affine_ok << "/" << kTrials;
  return {examples && range_ok == kTrials && affine_ok == kTrials, d.str()};
}

// 5. Backprop vs central differences.
Outcome GradientCheck() {
  const auto check = ::crowdseed::testing::CheckBackprop(150, 105);
  std::ostringstream d;
  d << "150 networks, " << check.compared << " parameters compared, max relative error "
    << check.max_rel_error << " (" << check.skipped << " probes straddling a ReLU kink skipped)";
  return {check.max_rel_error < 1e-4 && check.skipped * 100 < check.compared, d.str()};
}

// 6. Completeness, layer conservation and linear exactness.
Outcome AttributionAxioms() {
  SyntheticSpec spec = SyntheticSpec::WithDefaultWeights(12);
  spec.num_rows = 1000;
  const SyntheticData syn = GenerateSynthetic(spec, 106);
  const auto [train, scaler] = Standardize(syn.data);
  Rng rng(106);
  double worst_ig = 0.0, worst_layer = 0.0, worst_linear = 0.0;
  for (int n = 0; n < 6; ++n) {
    TrainConfig cfg;
    cfg.rng_seed = n;
    cfg.epochs = n % 3 == 0 ? 0 : 10 * n;
    const Mlp<double> m = MlpTrain(train, cfg);
    for (int k = 0; k < 5; ++k) {
      const Eigen::VectorXd x = train.features.row((n * 37 + k * 101) % train.rows()).transpose();
      for (int layer = 1; layer <= m.num_hidden_layers(); ++layer) {
        const AttributionResult r = Attribute(m, layer, x, {{}, 512});
        worst_ig = std::max(worst_ig, std::abs(r.completeness_gap));
        worst_layer = std::max(worst_layer, std::abs(r.conservation_gap));
      }
    }
    Mlp<double> linear = ::crowdseed::testing::RandomMlp({12, 12, 10, 8, 1}, rng);
    linear.hidden = Activation::kIdentity;
    linear.output = Activation::kIdentity;
    const Eigen::VectorXd x = Eigen::VectorXd::Random(12), base = Eigen::VectorXd::Random(12);
    Eigen::MatrixXd w = linear.weights[0];
    for (int l = 1; l < linear.num_layers(); ++l) w = linear.weights[l] * w;
    const Eigen::VectorXd exact = w.transpose().cwiseProduct(x - base);
    worst_linear = std::max(
        worst_linear, (IntegratedGradients(linear, x, {base, 1}) - exact).cwiseAbs().maxCoeff());
  }
  std::ostringstream d;
  d << "512 steps: max completeness gap " << worst_ig << ", max conservation gap (layers 1-3) "
    << worst_layer << "; linear model at 1 step off by " << worst_linear;
  return {worst_ig < 1e-3 && worst_layer < 1e-3 && worst_linear < 1e-12, d.str()};
}

// 7. Seeded vs random on planted data, one grid cell, 20 paired repetitions.
Outcome SyntheticReproduction() {
  SyntheticSpec spec = SyntheticSpec::WithDefaultWeights(12);
  spec.num_rows = 6400;
  spec.num_users = 5;
  spec.perturbation_rate = 0.1;
  const SyntheticData syn = GenerateSynthetic(spec, 107);
  GridConfig cfg;
  cfg.sample_sizes = {500};
  cfg.tp_rates = {0.4};
  cfg.epoch_settings = {50};
  cfg.repetitions = 20;
  cfg.model = ModelKind::kMlp;
  cfg.base_seed = 107;
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const GridResult grid = RunGrid(cfg, syn.data, &syn.profile);
  std::ostringstream d;
  bool pass = grid.num_ok() == grid.records.size();
  for (const ComparisonRow& row : SeededVsRandomReport(grid)) {
    d << InitArmName(row.arm) << " " << row.seeded.accuracy_mean << " vs random "
      << row.random.accuracy_mean << " (win rate " << row.win_rate << ", " << row.pairs
      << " pairs)";
    if (row.arm == InitArm::kKemeny) {
      pass = pass && row.pairs == 20 && row.seeded.accuracy_mean >= row.random.accuracy_mean &&
             row.win_rate > 0.5;
      d << " [criterion]";
    }
    d << "; ";
  }
  return {pass, d.str()};
}

// 8. Accuracy and F1 against hand-computed confusion matrices.
Outcome MetricsCorrectness() {
  int ok = 0, n = 0;
  for (const auto& c : ::crowdseed::testing::kConfusionCases) {
    // Rebuild label vectors so the counting path is exercised too.
    const long total = c.tp + c.fp + c.fn + c.tn;
    Eigen::VectorXi predicted(total), actual(total);
    long i = 0;
    for (long k = 0; k < c.tp; ++k, ++i) predicted[i] = 1, actual[i] = 1;
    for (long k = 0; k < c.fp; ++k, ++i) predicted[i] = 1, actual[i] = 0;
    for (long k = 0; k < c.fn; ++k, ++i) predicted[i] = 0, actual[i] = 1;
    for (long k = 0; k < c.tn; ++k, ++i) predicted[i] = 0, actual[i] = 0;
    const Metrics m = ComputeMetrics(predicted, actual);
    ok += std::abs(m.accuracy - c.accuracy) <= 1e-12 && std::abs(m.f1 - c.f1) <= 1e-12 &&
          m.tp == c.tp && m.fp == c.fp && m.fn == c.fn && m.tn == c.tn;
    ++n;
  }
  return {n >= 20 && ok == n, std::to_string(ok) + "/" + std::to_string(n) + " matrices exact"};
}

// 9. Every subcommand run twice with the same flags writes identical bytes.
Outcome CliDeterminism(const std::string& cli, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string features = "f11,f10,f9,f8,f7,f6,f5,f4,f3,f2,f1,f0";
  // {arguments with %s for the run index, output files}
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
      {"synth --seed 7 --rows 1500 --out-data data%s.csv --out-profile profile%s.json",
       {"data%s.csv", "profile%s.json"}},
      {"elicit --data data1.csv --profile elicit%s.json --user ann --seed 7 --ranking " +
           features + " --directions f0=-1",
       {"elicit%s.json"}},
      {"aggregate --profile profile1.json --method kemeny --out kemeny%s.json", {"kemeny%s.json"}},
      {"aggregate --profile profile1.json --method mc4 --out mc4%s.json", {"mc4%s.json"}},
      {"aggregate --profile profile1.json --method borda --out borda%s.json", {"borda%s.json"}},
      {"seed --features a,b,c --scores 0.3,0.1,0.7 --signs 1,-1,1 --seed 7 --out seed%s.json",
       {"seed%s.json"}},
      {"train --data data1.csv --init seeded --weights kemeny1.json --sample-size 500 "
       "--tp-rate 0.4 --epochs 10 --seed 7 --out mlp%s.json",
       {"mlp%s.json"}},
      {"train --data data1.csv --model svm --epochs 10 --seed 7 --out svm%s.json",
       {"svm%s.json"}},
      {"explain --model mlp1.json --data data1.csv --layer 2 --steps 16 --method all --seed 7 "
       "--out explain%s.csv",
       {"explain%s.csv"}},
      {"grid --data data1.csv --profile profile1.json --sizes 200,400 --tp-rates 0.2,0.6 "
       "--epochs 3 --reps 2 --seed 7 --jobs 4 --out grid%s.csv --report report%s.csv "
       "--table table%s.csv",
       {"grid%s.csv", "report%s.csv", "table%s.csv"}},
  };
  auto fill = [](std::string text, const std::string& run) {
    for (size_t p; (p = text.find("%s")) != std::string::npos;) text.replace(p, 2, run);
    return text;
  };
  int identical = 0, files = 0;
  std::string failures;
  for (const auto& [args, outputs] : commands) {
    for (const std::string run : {"1", "2"}) {
      const auto r = ::crowdseed::testing::RunCommand(cli + " " + fill(args, run), dir);
      if (r.exit_code != 0) {
        failures += " [" + fill(args, run) + " exited " + std::to_string(r.exit_code) + ": " +
                    r.err + "]";
      }
    }
    for (const auto& out : outputs) {
      ++files;
      const std::string a = dir + "/" + fill(out, "1"), b = dir + "/" + fill(out, "2");
      if (fs::exists(a) && fs::exists(b) &&
          ::crowdseed::testing::ReadFile(a) == ::crowdseed::testing::ReadFile(b)) {
        ++identical;
      } else {
        failures += " [" + fill(out, "1") + " differs]";
      }
    }
  }
  return {failures.empty() && identical == files,
          std::to_string(identical) + "/" + std::to_string(files) +
              " output files byte-identical across " + std::to_string(commands.size()) +
              " invocations" + failures};
}

}  // namespace
}  // namespace crowdseed

int main(int argc, char** argv) {
  using namespace crowdseed;
  if (argc != 3) {
    std::cerr << "usage: acceptance_suite <crowdseed binary> <scratch dir>\n";
    return 2;
  }
  const std::string cli = std::filesystem::absolute(argv[1]).string();
  const std::string dir = std::filesystem::absolute(argv[2]).string();
  std::filesystem::create_directories(dir);
  const std::vector<Criterion> criteria = {
      {1, "Kemeny matches brute force", 60, KemenyOracle},
      {2, "Kemeny optimal at F=12", 30, KemenyAtScale},
      {3, "MC4 sanity", 0, Mc4Sanity},
      {4, "seed weight contract", 0, Algorithm1Contract},
      {5, "backprop vs finite differences", 60, GradientCheck},
      {6, "attribution axioms", 0, AttributionAxioms},
      {7, "seeded beats random on planted data", 600, SyntheticReproduction},
      {8, "accuracy and F1", 0, MetricsCorrectness},
      {9, "CLI determinism", 0, [&] { return CliDeterminism(cli, dir + "/determinism"); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0 || seconds < c.time_limit_s;
    const bool pass = outcome.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
              << outcome.detail << " (" << Seconds(seconds)
              << (c.time_limit_s > 0 ? ", limit " + Seconds(c.time_limit_s) : "") << ")\n"
              << std::flush;
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : "all criteria met")
            << '\n';
  return failed ? 1 : 0;
}
