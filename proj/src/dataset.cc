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

#include "crowdseed/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include "crowdseed/csv.h"
#include "crowdseed/error.h"
#include "crowdseed/random.h"

namespace crowdseed {
namespace {

std::string Trim(const std::string& s) {
  const char* ws = " \t";
  const size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> ReadHeader(std::istream& in, const std::string& path) {
  std::string record;
  if (!ReadCsvRecord(in, &record)) throw Error(path + ": empty file, no header row");
  // Strip a UTF-8 byte order mark.
  if (record.rfind("\xEF\xBB\xBF", 0) == 0) record.erase(0, 3);
  std::vector<std::string> header = SplitCsvLine(record);
  for (auto& h : header) h = Trim(h);
  return header;
}

std::vector<int> ShuffledIndices(int n, Rng& rng) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  return idx;
}

}  // namespace

int FeatureSchema::IndexOf(const std::string& name) const {
  auto it = std::find(feature_names.begin(), feature_names.end(), name);
  return it == feature_names.end() ? -1 : static_cast<int>(it - feature_names.begin());
}

void FeatureSchema::Validate() const {
  CROWDSEED_CHECK(feature_names.size() >= 2, "schema needs at least 2 features");
  CROWDSEED_CHECK(!label_name.empty(), "schema label name is empty");
  std::set<std::string> seen;
  for (const auto& name : feature_names) {
    CROWDSEED_CHECK(!name.empty(), "schema contains an empty feature name");
    CROWDSEED_CHECK(seen.insert(name).second, "duplicate feature name '" + name + "'");
    CROWDSEED_CHECK(name != label_name,
                    "label '" + label_name + "' is also listed as a feature");
  }
}

Dataset Dataset::Subset(const std::vector<int>& indices) const {
  Dataset out;
  out.schema = schema;
  out.features.resize(static_cast<Eigen::Index>(indices.size()), features.cols());
  out.labels.resize(static_cast<Eigen::Index>(indices.size()));
  for (size_t r = 0; r < indices.size(); ++r) {
    out.features.row(r) = features.row(indices[r]);
    out.labels[r] = labels[indices[r]];
  }
  return out;
}

int SampleSpec::PositiveCount() const {
  return static_cast<int>(std::floor(size * tp_rate + 0.5));
}

void SampleSpec::Validate() const {
  CROWDSEED_CHECK(size > 0, "sample size must be positive");
  CROWDSEED_CHECK(tp_rate > 0.0 && tp_rate < 1.0, "tp_rate must lie in (0, 1)");
  CROWDSEED_CHECK(PositiveCount() >= 1 && NegativeCount() >= 1,
                  "sample of " + std::to_string(size) + " at tp_rate " +
                      std::to_string(tp_rate) + " leaves a class empty");
}

Dataset LoadCsv(const std::string& path, const FeatureSchema& schema) {
  schema.Validate();
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  const std::vector<std::string> header = ReadHeader(in, path);

  auto column_of = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw Error(path + ": missing column '" + name + "'");
    return static_cast<size_t>(it - header.begin());
  };
  const int f = schema.num_features();
  std::vector<size_t> feature_cols(f);
  for (int j = 0; j < f; ++j) feature_cols[j] = column_of(schema.feature_names[j]);
  const size_t label_col = column_of(schema.label_name);

  std::vector<double> values;
  std::vector<int> labels;
  std::string record;
  int line_no = 1;
  while (ReadCsvRecord(in, &record)) {
    ++line_no;
    if (Trim(record).empty() || record == "\r") continue;
    const std::vector<std::string> cells = SplitCsvLine(record);
    auto location = [&](size_t col) {
      return path + ": row " + std::to_string(line_no) + ", column '" + header[col] + "'";
    };
    auto cell = [&](size_t col) -> std::string {
      if (col >= cells.size()) throw Error(location(col) + ": missing cell");
      return Trim(cells[col]);
    };
    for (int j = 0; j < f; ++j) {
      const std::string text = cell(feature_cols[j]);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
          !std::isfinite(v)) {
        throw Error(location(feature_cols[j]) + ": cannot parse '" + text +
                    "' as a finite number");
      }
      values.push_back(v);
    }
    const std::string label = cell(label_col);
    if (label != "0" && label != "1") {
      throw Error(location(label_col) + ": label '" + label + "' is not 0 or 1");
    }
    labels.push_back(label == "1" ? 1 : 0);
  }

  Dataset ds;
  ds.schema = schema;
  const Eigen::Index n = static_cast<Eigen::Index>(labels.size());
  ds.features = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                               Eigen::RowMajor>>(values.data(), n, f);
  ds.labels = Eigen::Map<const Eigen::VectorXi>(labels.data(), n);
  return ds;
}

FeatureSchema InferSchema(const std::string& path, const std::string& label_name) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  FeatureSchema schema;
  schema.label_name = label_name;
  bool has_label = false;
  for (const auto& name : ReadHeader(in, path)) {
    if (name == label_name) {
      has_label = true;
    } else {
      schema.feature_names.push_back(name);
    }
  }
  if (!has_label) throw Error(path + ": missing column '" + label_name + "'");
  schema.Validate();
  return schema;
}

void WriteCsv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  for (const auto& name : ds.schema.feature_names) out << EscapeCsvField(name) << ',';
  out << EscapeCsvField(ds.schema.label_name) << '\n';
  for (int r = 0; r < ds.rows(); ++r) {
    for (int j = 0; j < ds.num_features(); ++j) out << FormatDouble(ds.features(r, j)) << ',';
    out << ds.labels[r] << '\n';
  }
  if (!out) throw Error("failed writing '" + path + "'");
}

std::pair<Dataset, Dataset> TrainTestSplit(const Dataset& ds, double train_fraction,
                                           uint64_t rng_seed) {
  CROWDSEED_CHECK(train_fraction > 0.0 && train_fraction < 1.0,
                  "train fraction must lie in (0, 1)");
  CROWDSEED_CHECK(ds.rows() > 0, "cannot split an empty dataset");
  Rng rng(rng_seed);
  std::vector<int> idx = ShuffledIndices(ds.rows(), rng);
  const auto n_train =
      static_cast<std::ptrdiff_t>(std::floor(train_fraction * ds.rows() + 0.5));
  std::vector<int> train(idx.begin(), idx.begin() + n_train);
  std::vector<int> test(idx.begin() + n_train, idx.end());
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {ds.Subset(train), ds.Subset(test)};
}

Dataset BiasedSample(const Dataset& ds, const SampleSpec& spec) {
  spec.Validate();
  std::vector<int> pos, neg;
  for (int r = 0; r < ds.rows(); ++r) (ds.labels[r] == 1 ? pos : neg).push_back(r);
  const int want_pos = spec.PositiveCount();
  const int want_neg = spec.NegativeCount();
  if (static_cast<int>(pos.size()) < want_pos || static_cast<int>(neg.size()) < want_neg) {
    throw Error("biased sample needs " + std::to_string(want_pos) + " positives and " +
                std::to_string(want_neg) + " negatives, dataset has " +
                std::to_string(pos.size()) + " and " + std::to_string(neg.size()));
  }
  Rng rng(spec.rng_seed);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);
  std::vector<int> chosen(pos.begin(), pos.begin() + want_pos);
  chosen.insert(chosen.end(), neg.begin(), neg.begin() + want_neg);
  std::sort(chosen.begin(), chosen.end());
  return ds.Subset(chosen);
}

std::pair<Dataset, ScalerParams> Standardize(const Dataset& ds) {
  CROWDSEED_CHECK(ds.rows() > 0, "cannot standardize an empty dataset");
  ScalerParams params;
  params.mean = ds.features.colwise().mean().transpose();
  const Eigen::MatrixXd centered = ds.features.rowwise() - params.mean.transpose();
  params.stddev = (centered.colwise().squaredNorm() / ds.rows()).cwiseSqrt().transpose();
  for (Eigen::Index j = 0; j < params.stddev.size(); ++j) {
    // Constant column, up to rounding in the mean.
    if (params.stddev[j] <= 1e-12 * (1.0 + std::abs(params.mean[j]))) params.stddev[j] = 1.0;
  }
  return {ApplyScaler(ds, params), params};
}

Dataset ApplyScaler(const Dataset& ds, const ScalerParams& params) {
  CROWDSEED_CHECK(params.mean.size() == ds.num_features(), "scaler arity mismatch");
  Dataset out = ds;
  out.features = ((ds.features.rowwise() - params.mean.transpose()).array().rowwise() /
                  params.stddev.transpose().array())
                     .matrix();
  return out;
}

Dataset InvertScaler(const Dataset& ds, const ScalerParams& params) {
  CROWDSEED_CHECK(params.mean.size() == ds.num_features(), "scaler arity mismatch");
  Dataset out = ds;
  out.features = (ds.features.array().rowwise() * params.stddev.transpose().array())
                     .matrix()
                     .rowwise() +
                 params.mean.transpose();
  return out;
}

}  // namespace crowdseed
