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

#include "preomp/decider/decider.h"

#include <array>
#include <utility>

#include <fmt/format.h>

namespace preomp::decider {

namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<DeciderKind, 3> kKindNames{{
    {DeciderKind::kHeuristic, "heuristic"},
    {DeciderKind::kProfiling, "profiling"},
    {DeciderKind::kRelaxedProfiling, "relaxed_profiling"},
}};

constexpr NameTable<Decision, 4> kDecisionNames{{
    {Decision::kSerial, "serial"},
    {Decision::kParallel, "parallel"},
    {Decision::kSerialProfiled, "serial_profiled"},
    {Decision::kParallelProfiled, "parallel_profiled"},
}};

constexpr NameTable<Phase, 3> kPhaseNames{{
    {Phase::kUnprofiled, "unprofiled"},
    {Phase::kSerialTimed, "serial_timed"},
    {Phase::kBothTimed, "both_timed"},
}};

constexpr NameTable<Reason, 9> kReasonNames{{
    {Reason::kOuterActive, "outer_active"},
    {Reason::kNoIterations, "no_iterations"},
    {Reason::kBelowThreshold, "below_threshold"},
    {Reason::kMeetsThreshold, "meets_threshold"},
    {Reason::kProfileSerial, "profile_serial"},
    {Reason::kProfileParallel, "profile_parallel"},
    {Reason::kInvalidated, "invalidated"},
    {Reason::kFastestSerial, "fastest_serial"},
    {Reason::kFastestParallel, "fastest_parallel"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const NameTable<E, N>& table, std::string_view s) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(DeciderKind kind) { return name_of(kKindNames, kind); }
std::optional<DeciderKind> parse_decider_kind(std::string_view s) {
  return value_of(kKindNames, s);
}

std::string_view to_string(Decision d) { return name_of(kDecisionNames, d); }
std::optional<Decision> parse_decision(std::string_view s) {
  return value_of(kDecisionNames, s);
}

std::string_view to_string(Phase p) { return name_of(kPhaseNames, p); }
std::optional<Phase> parse_phase(std::string_view s) {
  return value_of(kPhaseNames, s);
}

std::string_view to_string(Reason r) { return name_of(kReasonNames, r); }
std::optional<Reason> parse_reason(std::string_view s) {
  return value_of(kReasonNames, s);
}

Verdict heuristic_decide(std::int64_t iters, int threads, double threshold,
                         bool outer_active) {
  if (threads < 1) {
    throw std::invalid_argument(fmt::format("threads must be >= 1, got {}", threads));
  }
  if (!(threshold > 0.0)) {
    throw std::invalid_argument(
        fmt::format("threshold must be > 0, got {}", threshold));
  }
  if (outer_active) return {Decision::kSerial, Reason::kOuterActive};
  if (iters <= 0) return {Decision::kSerial, Reason::kNoIterations};
  if (static_cast<double>(iters) / threads >= threshold) {
    return {Decision::kParallel, Reason::kMeetsThreshold};
  }
  return {Decision::kSerial, Reason::kBelowThreshold};
}

Verdict profiling_decide(LoopProfileState& state, std::int64_t iters,
                         int threads, double threshold, bool outer_active,
                         std::int64_t current_work) {
  Verdict v = heuristic_decide(iters, threads, threshold, outer_active);
  if (v.reason != Reason::kBelowThreshold) {
    state.currently_parallel = v.decision == Decision::kParallel;
    return v;
  }
  bool invalidated = false;
  if (state.recorded_work && *state.recorded_work != current_work) {
    state.phase = Phase::kUnprofiled;
    state.serial_time = state.parallel_time = 0.0;
    state.recorded_work.reset();
    invalidated = true;
  }
  switch (state.phase) {
    case Phase::kUnprofiled:
      v = {Decision::kSerialProfiled,
           invalidated ? Reason::kInvalidated : Reason::kProfileSerial};
      break;
    case Phase::kSerialTimed:
      v = {Decision::kParallelProfiled, Reason::kProfileParallel};
      break;
    case Phase::kBothTimed:
      v = state.serial_time <= state.parallel_time
              ? Verdict{Decision::kSerial, Reason::kFastestSerial}
              : Verdict{Decision::kParallel, Reason::kFastestParallel};
      break;
  }
  state.currently_parallel = version_of(v.decision) == Version::kParallel;
  return v;
}

void record_timing(LoopProfileState& state, Version version, double elapsed,
                   std::int64_t work) {
  if (version == Version::kSerial) {
    if (state.phase != Phase::kUnprofiled) {
      throw ProtocolError(fmt::format(
          "loop {}: serial timing recorded in phase {}", state.loop_id,
          to_string(state.phase)));
    }
    state.serial_time = elapsed;
    state.recorded_work = work;
    state.phase = Phase::kSerialTimed;
    return;
  }
  if (state.phase != Phase::kSerialTimed) {
    throw ProtocolError(fmt::format(
        "loop {}: parallel timing recorded in phase {}", state.loop_id,
        to_string(state.phase)));
  }
  if (state.recorded_work != work) {
    state.phase = Phase::kUnprofiled;
    state.serial_time = state.parallel_time = 0.0;
    state.recorded_work.reset();
    return;
  }
  state.parallel_time = elapsed;
  state.phase = Phase::kBothTimed;
}

void ThreadContext::enter(Version chosen) {
  stack_.push_back(chosen);
  if (chosen == Version::kParallel) ++active_parallel_depth_;
}

void ThreadContext::exit() {
  if (stack_.empty()) throw ProtocolError("loop exit without matching enter");
  if (stack_.back() == Version::kParallel) --active_parallel_depth_;
  stack_.pop_back();
}

}  // namespace preomp::decider
