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

#include "crowdseed/profile_io.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "crowdseed/error.h"

namespace crowdseed {

using nlohmann::json;

namespace {

int FeatureIndex(const std::string& name, const std::vector<std::string>& feature_names) {
  auto it = std::find(feature_names.begin(), feature_names.end(), name);
  CROWDSEED_CHECK(it != feature_names.end(), "unknown feature '" + name + "'");
  return static_cast<int>(it - feature_names.begin());
}

json EntryToJson(const std::string& user_id, const Ranking& ranking,
                 const Eigen::VectorXi& directions,
                 const std::vector<std::string>& feature_names) {
  json entry;
  entry["user_id"] = user_id;
  json names = json::array();
  for (int item : ranking.order()) names.push_back(feature_names[item]);
  entry["ranking"] = names;
  json flags = json::object();
  for (size_t i = 0; i < feature_names.size(); ++i) flags[feature_names[i]] = directions[i];
  entry["directions"] = flags;
  return entry;
}

void WriteJson(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace

DirectionVotes ElicitedProfile::Votes() const {
  DirectionVotes votes = DirectionVotes::Zero(static_cast<int>(feature_names.size()));
  for (const auto& d : directions) votes.Add(d);
  return votes;
}

Ranking RankingFromNames(const std::vector<std::string>& names,
                         const std::vector<std::string>& feature_names) {
  std::set<std::string> seen;
  std::vector<int> order;
  for (const auto& name : names) {
    CROWDSEED_CHECK(seen.insert(name).second, "ranking lists '" + name + "' twice");
    order.push_back(FeatureIndex(name, feature_names));
  }
  for (const auto& name : feature_names) {
    CROWDSEED_CHECK(seen.count(name), "ranking is missing feature '" + name + "'");
  }
  return Ranking(std::move(order));
}

Eigen::VectorXi DirectionsFromPairs(const std::vector<std::pair<std::string, int>>& flags,
                                    const std::vector<std::string>& feature_names) {
  Eigen::VectorXi directions = Eigen::VectorXi::Ones(static_cast<int>(feature_names.size()));
  std::set<std::string> seen;
  for (const auto& [name, sign] : flags) {
    CROWDSEED_CHECK(seen.insert(name).second, "direction for '" + name + "' given twice");
    CROWDSEED_CHECK(sign == 1 || sign == -1,
                    "direction for '" + name + "' must be +1 or -1");
    directions[FeatureIndex(name, feature_names)] = sign;
  }
  return directions;
}

ElicitedProfile LoadProfile(const std::string& path,
                            const std::vector<std::string>& schema_features) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  ElicitedProfile result;
  try {
    const json doc = json::parse(in);
    std::vector<std::string> file_features = doc.value("features", std::vector<std::string>{});
    const json& entries = doc.at("entries");
    if (file_features.empty() && !entries.empty()) {
      file_features = entries.front().at("ranking").get<std::vector<std::string>>();
    }
    if (!schema_features.empty()) {
      std::vector<std::string> a = file_features, b = schema_features;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CROWDSEED_CHECK(file_features.empty() || a == b,
                      path + ": profile features do not match the schema");
      result.feature_names = schema_features;
    } else {
      result.feature_names = file_features;
    }
    for (const json& e : entries) {
      const std::string user = e.at("user_id").get<std::string>();
      try {
        result.profile.rankings.push_back(RankingFromNames(
            e.at("ranking").get<std::vector<std::string>>(), result.feature_names));
        std::vector<std::pair<std::string, int>> flags;
        if (e.contains("directions")) {
          for (const auto& [name, sign] : e.at("directions").items()) {
            flags.emplace_back(name, sign.get<int>());
          }
        }
        result.directions.push_back(DirectionsFromPairs(flags, result.feature_names));
      } catch (const Error& err) {
        throw Error(path + ": user '" + user + "': " + err.what());
      }
      result.profile.user_ids.push_back(user);
    }
  } catch (const json::exception& e) {
    throw Error(path + ": malformed profile file: " + e.what());
  }
  result.profile.Validate();
  return result;
}

void SaveProfile(const ElicitedProfile& profile, const std::string& path) {
  json doc;
  doc["features"] = profile.feature_names;
  doc["entries"] = json::array();
  for (int u = 0; u < profile.profile.num_voters(); ++u) {
    doc["entries"].push_back(EntryToJson(profile.profile.user_ids[u],
                                         profile.profile.rankings[u], profile.directions[u],
                                         profile.feature_names));
  }
  WriteJson(doc, path);
}

void AppendProfileEntry(const std::string& path, const std::vector<std::string>& feature_names,
                        const ProfileEntry& entry) {
  CROWDSEED_CHECK(!entry.user_id.empty(), "user id must not be empty");
  ElicitedProfile profile;
  if (std::filesystem::exists(path)) {
    profile = LoadProfile(path, feature_names);
    for (const auto& id : profile.profile.user_ids) {
      CROWDSEED_CHECK(id != entry.user_id,
                      path + ": user '" + entry.user_id + "' already has an entry");
    }
  } else {
    profile.feature_names = feature_names;
  }
  profile.profile.rankings.push_back(RankingFromNames(entry.ranking, profile.feature_names));
  profile.directions.push_back(DirectionsFromPairs(entry.directions, profile.feature_names));
  profile.profile.user_ids.push_back(entry.user_id);
  SaveProfile(profile, path);
}

}  // namespace crowdseed
