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

#ifndef PREOMP_COSTSIM_SCENARIO_H_
#define PREOMP_COSTSIM_SCENARIO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "preomp/costsim/program.h"
#include "preomp/costsim/simulate.h"
#include "preomp/generation_mode.h"

namespace preomp::costsim {

// Scenario files are YAML:
//
//   repeats: 5
//   levels:
//     - name: block
//       count: 4
//     - name: j_cell
//       count_table: [8, 2496, 8, 2496]
//       table_index: block        # enclosing level name or "repeat"
//       threshold: 1.0
//     - name: i_cell
//       count: 8
//       body_work: 0.001
//       parallelisable: true
//   overheads: {region_create: 0, decision_call: 0, instrument_call: 0,
//               ompif_serial_region: true}
//   perturbation: 0
//
// Every key but `levels`, `name` and one of `count`/`count_table` is
// optional. `overrides` are "dotted.key.path=value" strings applied before
// conversion, e.g. "levels.2.count=16" or "overheads.region_create=0.01";
// the value is parsed as YAML. Setting `count` drops `count_table` and
// `table_index`; setting `count_table` drops `count`.
//
// All functions throw ScenarioError with the offending key path.
SimProgram parse_scenario(std::string_view yaml,
                          std::span<const std::string> overrides = {});
SimProgram load_scenario(const std::filesystem::path& path,
                         std::span<const std::string> overrides = {});

// Inverse of parse_scenario (up to formatting).
std::string format_scenario(const SimProgram& program);

// Index of the level called `name`, or -1.
int find_level(const SimProgram& program, std::string_view name);

struct SimRun {
  int threads = 1;
  Policy policy;
  GenerationMode mode = GenerationMode::kDuplicate;
  SimReport report;
};

// One YAML document per run. Trace lines are included when `with_trace`.
std::string format_report_yaml(const SimProgram& program,
                               std::span<const SimRun> runs, bool with_trace);

// Header plus one row per run:
//   threads,decider,mode,total_time,bookkeeping_ops,<level>_parallel...
std::string format_report_csv(const SimProgram& program,
                              std::span<const SimRun> runs);

}  // namespace preomp::costsim

#endif  // PREOMP_COSTSIM_SCENARIO_H_
