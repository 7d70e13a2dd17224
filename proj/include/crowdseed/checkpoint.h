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

#ifndef CROWDSEED_CHECKPOINT_H_
#define CROWDSEED_CHECKPOINT_H_

#include <optional>
#include <string>

#include "crowdseed/dataset.h"
#include "crowdseed/mlp.h"
#include "crowdseed/svm.h"
#include "crowdseed/train_config.h"

namespace crowdseed {

enum class ModelKind { kSvm, kMlp };

std::string ModelKindName(ModelKind kind);
ModelKind ParseModelKind(const std::string& name);

// A trained model together with the schema, the scaler fitted on its
// training data and the configuration it was trained with.
struct Checkpoint {
  ModelKind kind = ModelKind::kMlp;
  std::optional<LinearSvm> svm;
  std::optional<Mlp<double>> mlp;
  FeatureSchema schema;
  ScalerParams scaler;
  TrainConfig config;
};

// JSON; every double is written in shortest round-trip form, so loading
// reproduces the parameters bit for bit.
void SaveCheckpoint(const Checkpoint& checkpoint, const std::string& path);
Checkpoint LoadCheckpoint(const std::string& path);

}  // namespace crowdseed

#endif  // CROWDSEED_CHECKPOINT_H_
