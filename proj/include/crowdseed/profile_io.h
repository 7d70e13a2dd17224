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

#ifndef CROWDSEED_PROFILE_IO_H_
#define CROWDSEED_PROFILE_IO_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/ranking.h"
#include "crowdseed/weight_seed.h"

namespace crowdseed {

// One volunteer's answer: features most-important-first plus a +1/-1
// direction per feature.
struct ProfileEntry {
  std::string user_id;
  std::vector<std::string> ranking;
  std::vector<std::pair<std::string, int>> directions;
};

// Rankings and direction votes indexed by position in `feature_names`.
struct ElicitedProfile {
  std::vector<std::string> feature_names;
  RankingProfile profile;
  // One +1/-1 vector per voter.
  std::vector<Eigen::VectorXi> directions;

  DirectionVotes Votes() const;
};

// Converts a name-level entry to item indices. Throws Error naming any
// unknown, duplicated or missing feature and any flag other than +1/-1.
// Features without a direction flag count as +1.
Ranking RankingFromNames(const std::vector<std::string>& names,
                         const std::vector<std::string>& feature_names);
Eigen::VectorXi DirectionsFromPairs(const std::vector<std::pair<std::string, int>>& flags,
                                    const std::vector<std::string>& feature_names);

// Profile file layout:
//   {"features": [names...],
//    "entries": [{"user_id": "...", "ranking": [names...],
//                 "directions": {"name": -1, ...}}, ...]}
// With a non-empty `schema_features` the item indices follow that order and
// every name is checked against it.
ElicitedProfile LoadProfile(const std::string& path,
                            const std::vector<std::string>& schema_features = {});
void SaveProfile(const ElicitedProfile& profile, const std::string& path);

// Appends `entry`, creating the file (with `feature_names`) if it does not
// exist. Validates the entry before writing anything.
void AppendProfileEntry(const std::string& path, const std::vector<std::string>& feature_names,
                        const ProfileEntry& entry);

}  // namespace crowdseed

#endif  // CROWDSEED_PROFILE_IO_H_
