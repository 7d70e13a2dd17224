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

#include "crowdseed/attribution.h"

#include <fstream>

#include "crowdseed/csv.h"

namespace crowdseed {

AttributionTable ParseAttributionTable(const std::string& name) {
  if (name == "ig") return AttributionTable::kIntegratedGradients;
  if (name == "conductance") return AttributionTable::kConductance;
  if (name == "layer") return AttributionTable::kLayerImportance;
  if (name == "all") return AttributionTable::kAll;
  throw Error("unknown attribution table '" + name + "'");
}

void WriteAttributionTable(const AttributionResult& result,
                           const std::vector<std::string>& feature_names,
                           AttributionTable which, const std::string& path) {
  CROWDSEED_CHECK(static_cast<Eigen::Index>(feature_names.size()) == result.ig.size(),
                  "feature names do not match the attribution arity");
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << "entity,value,method,layer,steps\n";
  const bool all = which == AttributionTable::kAll;
  if (all || which == AttributionTable::kIntegratedGradients) {
    for (Eigen::Index i = 0; i < result.ig.size(); ++i) {
      out << EscapeCsvField(feature_names[i]) << ',' << FormatDouble(result.ig[i])
          << ",integrated_gradients,0," << result.steps << '\n';
    }
  }
  if (all || which == AttributionTable::kConductance) {
    for (Eigen::Index j = 0; j < result.conductance.size(); ++j) {
      out << "neuron_" << j << ',' << FormatDouble(result.conductance[j]) << ",conductance,"
          << result.layer << ',' << result.steps << '\n';
    }
  }
  if (all || which == AttributionTable::kLayerImportance) {
    for (Eigen::Index i = 0; i < result.combined.size(); ++i) {
      out << EscapeCsvField(feature_names[i]) << ',' << FormatDouble(result.combined[i])
          << ",layer_feature_importance," << result.layer << ',' << result.steps << '\n';
    }
  }
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace crowdseed
