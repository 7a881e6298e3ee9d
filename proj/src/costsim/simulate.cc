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

#include "preomp/costsim/simulate.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>

#include "preomp/decider/engine.h"

namespace preomp::costsim {

using decider::DeciderKind;
using decider::Decision;
using decider::DecisionEngine;
using decider::Version;

std::string describe(const Policy& policy, const SimProgram& program) {
  if (const auto* kind = std::get_if<DeciderKind>(&policy)) {
    return std::string(decider::to_string(*kind));
  }
  int level = std::get<StaticPolicy>(policy).level;
  if (level >= 0 && level < static_cast<int>(program.levels.size())) {
    return fmt::format("static:{}", program.levels[level].name);
  }
  return fmt::format("static:{}", level);
}

namespace {

struct Cost {
  double time = 0.0;
  std::int64_t work = 0;  // innermost iterations executed
};

class Simulator {
 public:
  Simulator(const SimProgram& program, int threads, const Policy& policy,
            GenerationMode mode)
      : p_(program), threads_(threads), mode_(mode) {
    if (const auto* kind = std::get_if<DeciderKind>(&policy)) {
      engine_.emplace(*kind, threads);
      accurate_ = *kind == DeciderKind::kProfiling;
    } else {
      static_level_ = std::get<StaticPolicy>(policy).level;
    }
    indices_.assign(p_.levels.size(), 0);
    for (const LoopLevel& l : p_.levels) {
      report_.per_level_parallel_counts[l.name] = 0;
    }
  }

  SimReport run() {
    for (std::int64_t r = 0; r < p_.repeats; ++r) {
      repeat_ = r;
      double t = visit(0).time;
      report_.repeat_times.push_back(t);
      report_.total_time += t;
    }
    if (engine_) report_.trace = engine_->trace();
    return std::move(report_);
  }

 private:
  double bookkeeping(std::int64_t ops) {
    report_.bookkeeping_ops += ops;
    return static_cast<double>(ops) * p_.overheads.instrument_call;
  }

  Cost visit(int k) {
    const LoopLevel& level = p_.levels[k];
    const std::int64_t n = iteration_count(p_, k, indices_, repeat_);
    const bool decided = engine_ && level.parallelisable;

    double overhead = 0.0;
    if (accurate_) overhead += bookkeeping(1);

    Decision decision = Decision::kSerial;
    bool parallel = static_level_ == k;
    if (decided) {
      overhead += p_.overheads.decision_call;
      decision = engine_->decide(k, n, level.threshold);
      parallel = decider::version_of(decision) == Version::kParallel;
      engine_->enter(k);
      overhead += bookkeeping(1);
    }

    double loop_time = 0.0;
    const bool serial_region = !parallel && decided &&
                               mode_ == GenerationMode::kOmpIf &&
                               p_.overheads.ompif_serial_region;
    if ((parallel && threads_ > 1) || serial_region) {
      loop_time += p_.overheads.region_create;
    }
    if (parallel) ++report_.per_level_parallel_counts[level.name];

    const std::int64_t team = parallel ? threads_ : 1;
    const std::int64_t q = n / team;
    const std::int64_t rem = n % team;
    Cost body;
    if (k + 1 == static_cast<int>(p_.levels.size())) {
      std::int64_t largest = q + (rem > 0 ? 1 : 0);
      body = {static_cast<double>(largest) * level.body_work, n};
    } else {
      // Static block schedule: the first `rem` threads take q + 1 iterations.
      std::int64_t j = 0;
      for (std::int64_t t = 0; t < team && j < n; ++t) {
        std::int64_t size = q + (t < rem ? 1 : 0);
        double chunk = 0.0;
        for (std::int64_t end = j + size; j < end; ++j) {
          indices_[k] = j;
          Cost child = visit(k + 1);
          chunk += level.pre_work + child.time;
          body.work += child.work;
        }
        body.time = std::max(body.time, chunk);
      }
    }
    loop_time += body.time;

    if (decided) {
      overhead += bookkeeping(1);
      double measured = loop_time;
      if (decider::is_profiled(decision)) {
        overhead += bookkeeping(2);
        measured += p_.perturbation;
      }
      engine_->exit(k, measured, body.work);
    }
    return {overhead + loop_time, body.work};
  }

  const SimProgram& p_;
  const int threads_;
  const GenerationMode mode_;
  std::optional<DecisionEngine> engine_;
  bool accurate_ = false;
  std::optional<int> static_level_;
  std::vector<std::int64_t> indices_;
  std::int64_t repeat_ = 0;
  SimReport report_;
};

}  // namespace

SimReport simulate(const SimProgram& program, int threads, const Policy& policy,
                   GenerationMode mode) {
  validate_program(program);
  if (threads < 1) {
    throw std::invalid_argument(fmt::format("threads must be >= 1, got {}", threads));
  }
  if (const auto* s = std::get_if<StaticPolicy>(&policy)) {
    if (s->level < 0 || s->level >= static_cast<int>(program.levels.size())) {
      throw std::invalid_argument(
          fmt::format("static level {} does not exist", s->level));
    }
  }
  return Simulator(program, threads, policy, mode).run();
}

}  // namespace preomp::costsim
