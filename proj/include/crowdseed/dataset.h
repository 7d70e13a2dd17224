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

#ifndef CROWDSEED_DATASET_H_
#define CROWDSEED_DATASET_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace crowdseed {

// Names of the feature columns (in model input order) and of the binary
// target column.
struct FeatureSchema {
  std::vector<std::string> feature_names;
  std::string label_name;

  int num_features() const { return static_cast<int>(feature_names.size()); }
  // Index of `name` in feature_names, or -1.
  int IndexOf(const std::string& name) const;
  // Throws Error unless names are unique, non-empty, exclude the label and
  // number at least two.
  void Validate() const;
};

// Labeled tabular rows: `features` is rows x F, `labels` holds 0/1.
struct Dataset {
  FeatureSchema schema;
  Eigen::MatrixXd features;
  Eigen::VectorXi labels;

  int rows() const { return static_cast<int>(features.rows()); }
  int num_features() const { return static_cast<int>(features.cols()); }
  int CountPositives() const { return labels.sum(); }
  // Rows at the given indices, in the given order.
  Dataset Subset(const std::vector<int>& indices) const;
};

// Request for a class-skewed subsample.
struct SampleSpec {
  int size = 0;
  double tp_rate = 0.5;
  uint64_t rng_seed = 0;

  // round(size * tp_rate), half-up.
  int PositiveCount() const;
  int NegativeCount() const { return size - PositiveCount(); }
  void Validate() const;
};

struct ScalerParams {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;
};

// Reads a header-first CSV. Columns not named by the schema are ignored.
Dataset LoadCsv(const std::string& path, const FeatureSchema& schema);

// Schema with every header column except `label_name` as a feature.
FeatureSchema InferSchema(const std::string& path, const std::string& label_name);

void WriteCsv(const Dataset& ds, const std::string& path);

// Disjoint (train, test) partition with round(train_fraction * rows) train
// rows. Each part keeps the original row order.
std::pair<Dataset, Dataset> TrainTestSplit(const Dataset& ds,
                                           double train_fraction,
                                           uint64_t rng_seed);

// Exactly spec.size rows, spec.PositiveCount() of them positive, drawn
// without replacement.
Dataset BiasedSample(const Dataset& ds, const SampleSpec& spec);

// Per-feature z-scoring with population standard deviation. Constant
// columns map to zero and store a deviation of 1.
std::pair<Dataset, ScalerParams> Standardize(const Dataset& ds);
Dataset ApplyScaler(const Dataset& ds, const ScalerParams& params);
Dataset InvertScaler(const Dataset& ds, const ScalerParams& params);

}  // namespace crowdseed

#endif  // CROWDSEED_DATASET_H_
