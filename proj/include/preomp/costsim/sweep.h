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

#ifndef PREOMP_COSTSIM_SWEEP_H_
#define PREOMP_COSTSIM_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "preomp/costsim/program.h"

namespace preomp::costsim {

// start, start + step, ... up to stop (inclusive, with a small tolerance).
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::int64_t size() const;
  double at(std::int64_t i) const { return start + static_cast<double>(i) * step; }
};

// Parses "start:stop:step". Throws std::invalid_argument.
Grid parse_grid(std::string_view spec);

struct SweepPoint {
  double t_outer = 0.0;
  double outer_time = 0.0;  // outer level parallel with outer_threads
  double inner_time = 0.0;  // inner level parallel with inner_threads
};

// Static outer vs static inner simulation of a two-level template at every
// grid value of the outer level's pre_work.
std::vector<SweepPoint> sweep(const SimProgram& two_level, int outer_threads,
                              int inner_threads, const Grid& grid);

// Smallest grid t_outer at which the outer strategy is no slower than the
// inner one. Throws std::domain_error when the grid does not bracket that
// point: no grid value qualifies, or the first one already does while
// start > 0.
double sweep_crossing(const SimProgram& two_level, int outer_threads,
                      int inner_threads, const Grid& grid);

}  // namespace preomp::costsim

#endif  // PREOMP_COSTSIM_SWEEP_H_
