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

#ifndef CROWDSEED_TOOLS_COMMANDS_H_
#define CROWDSEED_TOOLS_COMMANDS_H_

#include <CLI11.hpp>

namespace crowdseed::cli {

// Each call adds one subcommand whose callback does the work. Domain
// failures surface as crowdseed::Error.
void AddElicit(CLI::App& app);
void AddAggregate(CLI::App& app);
void AddSeed(CLI::App& app);
void AddTrain(CLI::App& app);
void AddExplain(CLI::App& app);
void AddGrid(CLI::App& app);
void AddSynth(CLI::App& app);

}  // namespace crowdseed::cli

#endif  // CROWDSEED_TOOLS_COMMANDS_H_
