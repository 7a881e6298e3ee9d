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

#include "preomp/costsim/sweep.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "preomp/costsim/simulate.h"

namespace preomp::costsim {

std::int64_t Grid::size() const {
  return static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

Grid parse_grid(std::string_view spec) {
  Grid g;
  double* fields[] = {&g.start, &g.stop, &g.step};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t colon = spec.find(':', pos);
    if ((i < 2) == (colon == std::string_view::npos)) {
      throw std::invalid_argument(
          fmt::format("grid '{}' is not start:stop:step", spec));
    }
    std::string field(spec.substr(pos, colon - pos));
    std::size_t used = 0;
    try {
      *fields[i] = std::stod(field, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != field.size()) {
      throw std::invalid_argument(
          fmt::format("grid '{}': '{}' is not a number", spec, field));
    }
    pos = colon + 1;
  }
  if (!(g.step > 0.0) || g.stop < g.start || g.start < 0.0) {
    throw std::invalid_argument(fmt::format(
        "grid '{}' needs 0 <= start <= stop and step > 0", spec));
  }
  return g;
}

namespace {

void check_template(const SimProgram& p) {
  validate_program(p);
  if (p.levels.size() != 2) {
    throw std::invalid_argument("sweep template must have exactly two levels");
  }
  if (p.overheads != OverheadModel{} || p.perturbation != 0.0) {
    throw std::invalid_argument("sweep template must have zero overheads");
  }
}

}  // namespace

std::vector<SweepPoint> sweep(const SimProgram& two_level, int outer_threads,
                              int inner_threads, const Grid& grid) {
  check_template(two_level);
  SimProgram p = two_level;
  std::vector<SweepPoint> points;
  for (std::int64_t i = 0; i < grid.size(); ++i) {
    double t = grid.at(i);
    p.levels[0].pre_work = t;
    points.push_back({t,
                      simulate(p, outer_threads, StaticPolicy{0}).total_time,
                      simulate(p, inner_threads, StaticPolicy{1}).total_time});
  }
  return points;
}

double sweep_crossing(const SimProgram& two_level, int outer_threads,
                      int inner_threads, const Grid& grid) {
  auto points = sweep(two_level, outer_threads, inner_threads, grid);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].outer_time > points[i].inner_time) continue;
    if (i == 0 && grid.start > 0.0) {
      throw std::domain_error(fmt::format(
          "outer parallelisation already wins at t_outer = {}; lower the "
          "grid start",
          grid.start));
    }
    return points[i].t_outer;
  }
  throw std::domain_error(fmt::format(
      "no crossing in t_outer grid [{}, {}]; raise the grid stop", grid.start,
      grid.stop));
}

}  // namespace preomp::costsim
