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

#ifndef PREOMP_COSTSIM_PROGRAM_H_
#define PREOMP_COSTSIM_PROGRAM_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace preomp::costsim {

// Schema or consistency violation; the message starts with the key path.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index value meaning "the enclosing repeat loop".
inline constexpr int kRepeatIndex = -1;

// Per-outer-index iteration counts (alterations).
struct CountTable {
  std::vector<std::int64_t> values;
  // Level whose current index selects the entry, or kRepeatIndex.
  int index_level = 0;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

using CountSchedule = std::variant<std::int64_t, CountTable>;

struct LoopLevel {
  std::string name;
  CountSchedule count = std::int64_t{0};
  // Once per iteration, before the next level runs. Zero on the innermost.
  double pre_work = 0.0;
  // Per iteration of the innermost level. Zero elsewhere.
  double body_work = 0.0;
  // Carries a preomp directive.
  bool parallelisable = true;
  double threshold = 1.0;

  friend bool operator==(const LoopLevel&, const LoopLevel&) = default;
};

struct OverheadModel {
  double region_create = 0.0;
  double decision_call = 0.0;
  double instrument_call = 0.0;
  // ompif mode opens a region even when the decision is serial.
  bool ompif_serial_region = true;

  friend bool operator==(const OverheadModel&, const OverheadModel&) = default;
};

struct SimProgram {
  std::int64_t repeats = 1;
  std::vector<LoopLevel> levels;  // outermost first
  OverheadModel overheads;
  // Added to every profiled timing.
  double perturbation = 0.0;

  friend bool operator==(const SimProgram&, const SimProgram&) = default;
};

// Throws ScenarioError naming the first offending key.
void validate_program(const SimProgram& program);

// Iteration count of `level` given the current indices of its enclosing
// levels (`indices[k]` for k < level) and of the repeat loop.
std::int64_t iteration_count(const SimProgram& program, int level,
                             std::span<const std::int64_t> indices,
                             std::int64_t repeat);

// Largest count any visit of `level` can see.
std::int64_t max_iteration_count(const SimProgram& program, int level);

// Two parallelisable levels "outer" and "inner", no overheads.
SimProgram make_two_level_nest(std::int64_t outer_iters,
                               std::int64_t inner_iters, double t_outer,
                               double t_inner);

}  // namespace preomp::costsim

#endif  // PREOMP_COSTSIM_PROGRAM_H_
