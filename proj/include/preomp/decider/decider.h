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

#ifndef PREOMP_DECIDER_DECIDER_H_
#define PREOMP_DECIDER_DECIDER_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace preomp::decider {

enum class DeciderKind { kHeuristic, kProfiling, kRelaxedProfiling };

std::string_view to_string(DeciderKind kind);
std::optional<DeciderKind> parse_decider_kind(std::string_view s);

enum class Version { kSerial, kParallel };

enum class Decision { kSerial, kParallel, kSerialProfiled, kParallelProfiled };

std::string_view to_string(Decision d);
std::optional<Decision> parse_decision(std::string_view s);

constexpr Version version_of(Decision d) {
  return d == Decision::kParallel || d == Decision::kParallelProfiled
             ? Version::kParallel
             : Version::kSerial;
}

constexpr bool is_profiled(Decision d) {
  return d == Decision::kSerialProfiled || d == Decision::kParallelProfiled;
}

enum class Phase { kUnprofiled, kSerialTimed, kBothTimed };

std::string_view to_string(Phase p);
std::optional<Phase> parse_phase(std::string_view s);

enum class Reason {
  kOuterActive,
  kNoIterations,
  kBelowThreshold,
  kMeetsThreshold,
  kProfileSerial,
  kProfileParallel,
  kInvalidated,  // work measure changed; serial run re-profiled
  kFastestSerial,
  kFastestParallel,
};

std::string_view to_string(Reason r);
std::optional<Reason> parse_reason(std::string_view s);

struct Verdict {
  Decision decision = Decision::kSerial;
  Reason reason = Reason::kBelowThreshold;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Raised on calls that break the enter/exit or decide/record protocol.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Per-loop profiling record. Times are in virtual seconds.
struct LoopProfileState {
  int loop_id = 0;
  Phase phase = Phase::kUnprofiled;
  double serial_time = 0.0;
  double parallel_time = 0.0;
  // Set whenever phase != kUnprofiled.
  std::optional<std::int64_t> recorded_work;
  bool currently_parallel = false;

  friend bool operator==(const LoopProfileState&,
                         const LoopProfileState&) = default;
};

// Serial when an enclosing loop runs in parallel or there is nothing to do;
// otherwise parallel iff iters / threads >= threshold.
// Throws std::invalid_argument unless threads >= 1 and threshold > 0.
Verdict heuristic_decide(std::int64_t iters, int threads, double threshold,
                         bool outer_active);

// Heuristic first; on failure consults (and possibly invalidates) `state`.
// Ties between recorded times go to serial.
Verdict profiling_decide(LoopProfileState& state, std::int64_t iters,
                         int threads, double threshold, bool outer_active,
                         std::int64_t current_work);

// Stores the timing of a *_profiled execution and advances the phase.
// A parallel timing whose work differs from the serial one resets the state.
// Throws ProtocolError when `version` does not match the pending phase.
void record_timing(LoopProfileState& state, Version version, double elapsed,
                   std::int64_t work);

// Enclosing-loop stack of one thread lineage.
class ThreadContext {
 public:
  void enter(Version chosen);
  // Throws ProtocolError on an empty stack.
  void exit();

  bool outer_active() const { return active_parallel_depth_ > 0; }
  int active_parallel_depth() const { return active_parallel_depth_; }
  int nesting_depth() const { return static_cast<int>(stack_.size()); }

 private:
  std::vector<Version> stack_;
  int active_parallel_depth_ = 0;
};

}  // namespace preomp::decider

#endif  // PREOMP_DECIDER_DECIDER_H_
