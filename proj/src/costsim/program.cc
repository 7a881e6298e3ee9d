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

#include "preomp/costsim/program.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

namespace preomp::costsim {

namespace {

[[noreturn]] void fail(std::string_view path, std::string_view what) {
  throw ScenarioError(fmt::format("{}: {}", path, what));
}

void check_duration(double v, std::string_view path) {
  if (!std::isfinite(v) || v < 0.0) {
    fail(path, fmt::format("must be a finite duration >= 0, got {}", v));
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!head(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return head(c) || (c >= '0' && c <= '9');
  });
}

}  // namespace

std::int64_t max_iteration_count(const SimProgram& program, int level) {
  if (level == kRepeatIndex) return program.repeats;
  const CountSchedule& s = program.levels.at(level).count;
  if (const auto* n = std::get_if<std::int64_t>(&s)) return *n;
  const auto& values = std::get<CountTable>(s).values;
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

void validate_program(const SimProgram& program) {
  if (program.repeats < 0) fail("repeats", "must be >= 0");
  if (program.levels.empty()) fail("levels", "at least one level is required");
  check_duration(program.perturbation, "perturbation");
  check_duration(program.overheads.region_create, "overheads.region_create");
  check_duration(program.overheads.decision_call, "overheads.decision_call");
  check_duration(program.overheads.instrument_call, "overheads.instrument_call");

  std::set<std::string_view> names;
  const int depth = static_cast<int>(program.levels.size());
  for (int k = 0; k < depth; ++k) {
    const LoopLevel& l = program.levels[k];
    std::string path = fmt::format("levels.{}", k);
    if (!is_identifier(l.name)) {
      fail(path + ".name", fmt::format("'{}' is not an identifier", l.name));
    }
    if (!names.insert(l.name).second) {
      fail(path + ".name", fmt::format("duplicate level name '{}'", l.name));
    }
    check_duration(l.pre_work, path + ".pre_work");
    check_duration(l.body_work, path + ".body_work");
    if (k == depth - 1 && l.pre_work != 0.0) {
      fail(path + ".pre_work", "must be 0 on the innermost level");
    }
    if (k != depth - 1 && l.body_work != 0.0) {
      fail(path + ".body_work", "only the innermost level has body work");
    }
    if (!(l.threshold > 0.0) || !std::isfinite(l.threshold)) {
      fail(path + ".threshold", "must be > 0");
    }
    if (const auto* n = std::get_if<std::int64_t>(&l.count)) {
      if (*n < 0) fail(path + ".count", "must be >= 0");
      continue;
    }
    const CountTable& t = std::get<CountTable>(l.count);
    if (t.values.empty()) fail(path + ".count_table", "must not be empty");
    for (std::int64_t v : t.values) {
      if (v < 0) fail(path + ".count_table", "entries must be >= 0");
    }
    if (t.index_level != kRepeatIndex &&
        (t.index_level < 0 || t.index_level >= k)) {
      fail(path + ".table_index", "must name an enclosing level or 'repeat'");
    }
    std::int64_t needed = max_iteration_count(program, t.index_level);
    if (static_cast<std::int64_t>(t.values.size()) < needed) {
      fail(path + ".count_table",
           fmt::format("has {} entries but the index reaches {}",
                       t.values.size(), needed));
    }
  }
}

std::int64_t iteration_count(const SimProgram& program, int level,
                             std::span<const std::int64_t> indices,
                             std::int64_t repeat) {
  const CountSchedule& s = program.levels.at(level).count;
  if (const auto* n = std::get_if<std::int64_t>(&s)) return *n;
  const CountTable& t = std::get<CountTable>(s);
  std::int64_t index = t.index_level == kRepeatIndex ? repeat
                                                     : indices[t.index_level];
  return t.values.at(static_cast<std::size_t>(index));
}

SimProgram make_two_level_nest(std::int64_t outer_iters,
                               std::int64_t inner_iters, double t_outer,
                               double t_inner) {
  SimProgram p;
  p.levels.push_back({"outer", outer_iters, t_outer, 0.0, true, 1.0});
  p.levels.push_back({"inner", inner_iters, 0.0, t_inner, true, 1.0});
  return p;
}

}  // namespace preomp::costsim
