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

#ifndef PREOMP_DECIDER_ENGINE_H_
#define PREOMP_DECIDER_ENGINE_H_

#include <cstdint>
#include <map>
#include <optional>

#include "preomp/decider/decider.h"
#include "preomp/decider/trace.h"

namespace preomp::decider {

// Runtime-side driver tying the decision functions, per-loop profile state
// and the enclosing-loop stack together. One execution of a directive loop
// is
//
//   Decision d = engine.decide(id, iters, threshold);
//   engine.enter(id);
//   ... loop body ...
//   engine.exit(id, elapsed, work);
//
// `work` is the number of innermost iterations executed beneath the loop.
// The accurate profiler compares the work seen on the previous execution
// against the recorded one; the relaxed profiler only the loop's own
// iteration count.
class DecisionEngine {
 public:
  // Throws std::invalid_argument unless threads >= 1.
  DecisionEngine(DeciderKind kind, int threads);

  Decision decide(int loop_id, std::int64_t iters, double threshold);
  // Throws ProtocolError unless decide() ran for `loop_id` and no execution
  // of it is open.
  void enter(int loop_id);
  // Throws ProtocolError unless `loop_id` is the innermost open execution.
  void exit(int loop_id, double elapsed, std::int64_t work);

  DeciderKind kind() const { return kind_; }
  int threads() const { return threads_; }
  bool outer_active() const { return context_.outer_active(); }
  const DecisionTrace& trace() const { return trace_; }
  // nullptr for loops never decided.
  const LoopProfileState* state(int loop_id) const;

 private:
  struct LoopRecord {
    LoopProfileState profile;
    std::int64_t invocations = 0;
    std::optional<std::int64_t> last_work;
    std::optional<Decision> pending;  // decided, not yet entered
    std::optional<Decision> open;     // entered, not yet exited
    std::int64_t pending_iters = 0;
  };

  DeciderKind kind_;
  int threads_;
  ThreadContext context_;
  std::vector<int> open_loops_;
  std::map<int, LoopRecord> loops_;
  DecisionTrace trace_;
};

}  // namespace preomp::decider

#endif  // PREOMP_DECIDER_ENGINE_H_
