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

#include "preomp/decider/engine.h"

#include <fmt/format.h>

namespace preomp::decider {

DecisionEngine::DecisionEngine(DeciderKind kind, int threads)
    : kind_(kind), threads_(threads) {
  if (threads < 1) {
    throw std::invalid_argument(fmt::format("threads must be >= 1, got {}", threads));
  }
}

Decision DecisionEngine::decide(int loop_id, std::int64_t iters,
                                double threshold) {
  auto [it, fresh] = loops_.try_emplace(loop_id);
  LoopRecord& rec = it->second;
  if (fresh) rec.profile.loop_id = loop_id;
  if (rec.open) {
    throw ProtocolError(
        fmt::format("loop {}: decision while an execution is open", loop_id));
  }

  TraceRecord t;
  t.loop_id = loop_id;
  t.invocation_index = rec.invocations++;
  t.iters = iters;
  t.threads = threads_;
  t.outer_active = context_.outer_active();

  Verdict v;
  if (kind_ == DeciderKind::kHeuristic) {
    v = heuristic_decide(iters, threads_, threshold, t.outer_active);
  } else {
    std::int64_t work = kind_ == DeciderKind::kRelaxedProfiling
                            ? iters
                            : rec.last_work.value_or(0);
    v = profiling_decide(rec.profile, iters, threads_, threshold,
                         t.outer_active, work);
    t.phase = rec.profile.phase;
  }
  t.decision = v.decision;
  t.reason = v.reason;
  trace_.push_back(t);

  rec.pending = v.decision;
  rec.pending_iters = iters;
  return v.decision;
}

void DecisionEngine::enter(int loop_id) {
  auto it = loops_.find(loop_id);
  if (it == loops_.end() || !it->second.pending) {
    throw ProtocolError(fmt::format("loop {}: enter without a decision", loop_id));
  }
  LoopRecord& rec = it->second;
  rec.open = rec.pending;
  rec.pending.reset();
  context_.enter(version_of(*rec.open));
  open_loops_.push_back(loop_id);
}

void DecisionEngine::exit(int loop_id, double elapsed, std::int64_t work) {
  if (open_loops_.empty() || open_loops_.back() != loop_id) {
    throw ProtocolError(fmt::format("loop {}: unbalanced exit", loop_id));
  }
  LoopRecord& rec = loops_.at(loop_id);
  Decision d = *rec.open;
  rec.open.reset();
  open_loops_.pop_back();
  context_.exit();
  rec.last_work = work;
  if (kind_ != DeciderKind::kHeuristic && is_profiled(d)) {
    std::int64_t measure =
        kind_ == DeciderKind::kRelaxedProfiling ? rec.pending_iters : work;
    record_timing(rec.profile, version_of(d), elapsed, measure);
  }
}

const LoopProfileState* DecisionEngine::state(int loop_id) const {
  auto it = loops_.find(loop_id);
  return it == loops_.end() ? nullptr : &it->second.profile;
}

}  // namespace preomp::decider
