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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lqs/tools/config.hpp"

namespace lqs::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInvariant = 4;

struct RunOptions {
  std::string subcommand;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 0;
  int threads = 1;
  bool dump_hamiltonian = false;
};

const std::vector<std::string>& subcommand_names();

/// Permitted keys for a subcommand. Throws ConfigError for an unknown name.
std::vector<KeySpec> schema_for(const std::string& subcommand);

/// Resolves the config against the subcommand schema, runs it and writes the
/// CSV outputs plus manifest.json into options.out_dir. Errors are reported
/// on `err` and mapped to exit codes: 2 config, 3 resource cap, 4 invariant.
int run(const RunOptions& options, Config config, std::ostream& err);

/// Loads the config file first; an unreadable file is a config error.
int run_file(const RunOptions& options, const std::string& config_path, std::ostream& err);

/// 64-bit FNV-1a of a byte string, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace lqs::tools
