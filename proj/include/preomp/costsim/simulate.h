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

#ifndef PREOMP_COSTSIM_SIMULATE_H_
#define PREOMP_COSTSIM_SIMULATE_H_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "preomp/costsim/program.h"
#include "preomp/decider/decider.h"
#include "preomp/decider/trace.h"
#include "preomp/generation_mode.h"

namespace preomp::costsim {

// Plain OpenMP baseline: `level` always runs parallel, every other level
// serial, no decision functions or instrumentation.
struct StaticPolicy {
  int level = 0;

  friend bool operator==(const StaticPolicy&, const StaticPolicy&) = default;
};

using Policy = std::variant<decider::DeciderKind, StaticPolicy>;

std::string describe(const Policy& policy, const SimProgram& program);

struct SimReport {
  double total_time = 0.0;
  // Level name -> executions that ran parallel. Every level is present.
  std::map<std::string, std::int64_t> per_level_parallel_counts;
  decider::DecisionTrace trace;
  // enter/exit calls, work counters and profiling timer reads.
  std::int64_t bookkeeping_ops = 0;
  std::vector<double> repeat_times;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

// Virtual-time execution of `program`. Loop ids are level indices.
//
// A parallel level costs its largest static block chunk plus region_create
// (none with threads == 1). Each decision costs decision_call and each
// bookkeeping op instrument_call:
//   - every decided visit: enter + exit,
//   - accurate profiling: one work counter per visit of any level,
//   - profiled executions: two timer reads.
// In ompif mode with ompif_serial_region, every serial decision still pays
// region_create, whatever the thread count.
//
// Throws ScenarioError for invalid programs and std::invalid_argument for
// threads < 1 or an out-of-range static level.
SimReport simulate(const SimProgram& program, int threads, const Policy& policy,
                   GenerationMode mode = GenerationMode::kDuplicate);

}  // namespace preomp::costsim

#endif  // PREOMP_COSTSIM_SIMULATE_H_
