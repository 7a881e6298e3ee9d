// Copyright 2026 The preomp Authors
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

#ifndef PREOMP_CLI_COMMANDS_H_
#define PREOMP_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "preomp/generation_mode.h"

namespace preomp::cli {

struct TranspileConfig {
  std::string input_path;
  // Empty: write C to `out` and skip the manifest.
  std::string output_path;
  // Defaults to output_path + ".manifest".
  std::string manifest_path;
  GenerationMode mode = GenerationMode::kDuplicate;
};

struct SimulateConfig {
  std::string scenario_path;
  std::vector<int> threads{1};
  std::vector<std::string> deciders{"heuristic"};
  // Level name; replaces the deciders with a plain OpenMP baseline.
  std::string static_level;
  GenerationMode mode = GenerationMode::kDuplicate;
  std::vector<std::string> overrides;
  bool trace = false;
  std::string format = "yaml";
  std::string output_path;  // empty: `out`
};

struct ModelConfig {
  std::int64_t outer_iters = 0;
  std::int64_t inner_iters = 0;
  double t_outer = 0.0;
  double t_inner = 0.0;
  int outer_threads = 1;
  int inner_threads = 1;
  std::string sweep;  // "start:stop:step" or empty
};

// Each returns the process exit status; diagnostics go to `err`.
int run_transpile(const TranspileConfig& config, std::ostream& out,
                  std::ostream& err);
int run_simulate(const SimulateConfig& config, std::ostream& out,
                 std::ostream& err);
int run_model(const ModelConfig& config, std::ostream& out, std::ostream& err);

// `preomp transpile|simulate|model ...`
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace preomp::cli

#endif  // PREOMP_CLI_COMMANDS_H_
