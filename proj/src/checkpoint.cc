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

#include "crowdseed/checkpoint.h"

#include <fstream>

#include <json.hpp>

#include "crowdseed/error.h"

namespace crowdseed {

using nlohmann::json;

namespace {

json ToJson(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd VectorFromJson(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

// Row-major nested arrays.
json ToJson(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(ToJson(Eigen::VectorXd(m.row(r))));
  return rows;
}

Eigen::MatrixXd MatrixFromJson(const json& j, Eigen::Index rows, Eigen::Index cols) {
  CROWDSEED_CHECK(j.is_array() && static_cast<Eigen::Index>(j.size()) == rows,
                  "weight matrix has the wrong number of rows");
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::VectorXd row = VectorFromJson(j[r]);
    CROWDSEED_CHECK(row.size() == cols, "weight matrix has the wrong number of columns");
    m.row(r) = row.transpose();
  }
  return m;
}

json ConfigToJson(const TrainConfig& cfg) {
  json j;
  j["epochs"] = cfg.epochs;
  j["learning_rate"] = cfg.learning_rate;
  j["batch_size"] = cfg.batch_size;
  j["rng_seed"] = cfg.rng_seed;
  j["init_mode"] = InitModeName(cfg.init_mode);
  j["l2"] = cfg.l2;
  j["hidden_sizes"] = cfg.hidden_sizes;
  j["seed_jitter"] = cfg.seed_jitter;
  if (cfg.seed) {
    j["seed"] = {{"values", ToJson(cfg.seed->values)},
                 {"provenance", cfg.seed->provenance},
                 {"features", cfg.seed->feature_names},
                 {"degenerate", cfg.seed->degenerate}};
  }
  return j;
}

TrainConfig ConfigFromJson(const json& j) {
  TrainConfig cfg;
  cfg.epochs = j.at("epochs").get<int>();
  cfg.learning_rate = j.at("learning_rate").get<double>();
  cfg.batch_size = j.at("batch_size").get<int>();
  cfg.rng_seed = j.at("rng_seed").get<uint64_t>();
  const std::string mode = j.at("init_mode").get<std::string>();
  CROWDSEED_CHECK(mode == "random" || mode == "seeded", "unknown init mode '" + mode + "'");
  cfg.init_mode = mode == "seeded" ? InitMode::kSeeded : InitMode::kRandom;
  cfg.l2 = j.at("l2").get<double>();
  cfg.hidden_sizes = j.at("hidden_sizes").get<std::vector<int>>();
  cfg.seed_jitter = j.at("seed_jitter").get<double>();
  if (j.contains("seed")) {
    SeedWeights seed;
    seed.values = VectorFromJson(j["seed"].at("values"));
    seed.provenance = j["seed"].value("provenance", std::string{});
    seed.feature_names = j["seed"].value("features", std::vector<std::string>{});
    seed.degenerate = j["seed"].value("degenerate", false);
    cfg.seed = std::move(seed);
  }
  return cfg;
}

}  // namespace

std::string ModelKindName(ModelKind kind) { return kind == ModelKind::kSvm ? "svm" : "mlp"; }

ModelKind ParseModelKind(const std::string& name) {
  if (name == "svm") return ModelKind::kSvm;
  if (name == "mlp") return ModelKind::kMlp;
  throw Error("unknown model '" + name + "'");
}

void SaveCheckpoint(const Checkpoint& checkpoint, const std::string& path) {
  json doc;
  doc["model"] = ModelKindName(checkpoint.kind);
  doc["features"] = checkpoint.schema.feature_names;
  doc["label"] = checkpoint.schema.label_name;
  doc["scaler"] = {{"mean", ToJson(checkpoint.scaler.mean)},
                   {"stddev", ToJson(checkpoint.scaler.stddev)}};
  doc["train_config"] = ConfigToJson(checkpoint.config);
  if (checkpoint.kind == ModelKind::kSvm) {
    CROWDSEED_CHECK(checkpoint.svm.has_value(), "SVM checkpoint without a model");
    doc["weights"] = ToJson(checkpoint.svm->weights);
    doc["bias"] = checkpoint.svm->bias;
  } else {
    CROWDSEED_CHECK(checkpoint.mlp.has_value(), "network checkpoint without a model");
    const Mlp<double>& m = *checkpoint.mlp;
    doc["layer_sizes"] = m.layer_sizes();
    doc["hidden_activation"] = ActivationName(m.hidden);
    doc["output_activation"] = ActivationName(m.output);
    json layers = json::array();
    for (int l = 0; l < m.num_layers(); ++l) {
      layers.push_back({{"weights", ToJson(m.weights[l])}, {"biases", ToJson(m.biases[l])}});
    }
    doc["layers"] = layers;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

Checkpoint LoadCheckpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Checkpoint cp;
  try {
    const json doc = json::parse(in);
    cp.kind = ParseModelKind(doc.at("model").get<std::string>());
    cp.schema.feature_names = doc.at("features").get<std::vector<std::string>>();
    cp.schema.label_name = doc.at("label").get<std::string>();
    cp.scaler.mean = VectorFromJson(doc.at("scaler").at("mean"));
    cp.scaler.stddev = VectorFromJson(doc.at("scaler").at("stddev"));
    cp.config = ConfigFromJson(doc.at("train_config"));
    const int f = cp.schema.num_features();
    CROWDSEED_CHECK(cp.scaler.mean.size() == f && cp.scaler.stddev.size() == f,
                    "scaler arity does not match the feature list");
    if (cp.kind == ModelKind::kSvm) {
      LinearSvm svm;
      svm.weights = VectorFromJson(doc.at("weights"));
      svm.bias = doc.at("bias").get<double>();
      CROWDSEED_CHECK(svm.weights.size() == f, "SVM weight arity does not match the features");
      cp.svm = std::move(svm);
    } else {
      const auto sizes = doc.at("layer_sizes").get<std::vector<int>>();
      CROWDSEED_CHECK(!sizes.empty() && sizes.front() == f,
                      "network input width does not match the features");
      Mlp<double> m = Mlp<double>::Zeros(sizes);
      m.hidden = ParseActivation(doc.at("hidden_activation").get<std::string>());
      m.output = ParseActivation(doc.at("output_activation").get<std::string>());
      const json& layers = doc.at("layers");
      CROWDSEED_CHECK(static_cast<int>(layers.size()) == m.num_layers(),
                      "layer count does not match layer_sizes");
      for (int l = 0; l < m.num_layers(); ++l) {
        m.weights[l] = MatrixFromJson(layers[l].at("weights"), sizes[l + 1], sizes[l]);
        m.biases[l] = VectorFromJson(layers[l].at("biases"));
        CROWDSEED_CHECK(m.biases[l].size() == sizes[l + 1], "bias arity mismatch");
      }
      CROWDSEED_CHECK(m.AllFinite(), "network parameters must be finite");
      cp.mlp = std::move(m);
    }
  } catch (const json::exception& e) {
    throw Error(path + ": malformed checkpoint: " + e.what());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
  return cp;
}

}  // namespace crowdseed
