// Copyright 2026 The LatticeQS Authors
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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lqs/tools/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lqs: lattice quantum simulation runner"};
  app.set_version_flag("--version", std::string(LQS_VERSION));
  app.require_subcommand(1);

  std::string config_path;
  lqs::tools::RunOptions options;
  std::string out_dir = ".";

  for (const auto& name : lqs::tools::subcommand_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config,-c", config_path, "INI configuration file")->required();
    sub->add_option("--out,-o", out_dir, "output directory")->capture_default_str();
    sub->add_option("--seed", options.seed, "optimizer seed")->capture_default_str();
    sub->add_option("--threads", options.threads, "worker threads")->capture_default_str();
    sub->add_flag("--dump-hamiltonian", options.dump_hamiltonian, "also write hamiltonian.txt");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lqs::tools::kExitConfig;
  }

  options.subcommand = app.get_subcommands().front()->get_name();
  options.out_dir = out_dir;
  return lqs::tools::run_file(options, config_path, std::cerr);
}
