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

// Command-line front end: elicit rankings, aggregate them into seed
// weights, train and explain models, and run the experiment grid.

#include <iostream>

#include <CLI11.hpp>

#include "commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Seed classifier weights from crowd-sourced feature rankings"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; flags on the command line win")
      ->configurable(false);
  crowdseed::cli::AddElicit(app);
  crowdseed::cli::AddAggregate(app);
  crowdseed::cli::AddSeed(app);
  crowdseed::cli::AddTrain(app);
  crowdseed::cli::AddExplain(app);
  crowdseed::cli::AddGrid(app);
  crowdseed::cli::AddSynth(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
