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

#ifndef PREOMP_DECIDER_TRACE_H_
#define PREOMP_DECIDER_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "preomp/decider/decider.h"

namespace preomp::decider {

// One decision-function invocation.
struct TraceRecord {
  int loop_id = 0;
  // 0-based count of earlier decisions for the same loop.
  std::int64_t invocation_index = 0;
  std::int64_t iters = 0;
  int threads = 1;
  bool outer_active = false;
  // Profiling phase the decision was taken in; nullopt for the heuristic.
  std::optional<Phase> phase;
  Decision decision = Decision::kSerial;
  Reason reason = Reason::kBelowThreshold;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using DecisionTrace = std::vector<TraceRecord>;

// "loop_id,invocation_index,iters,threads,outer_active,phase,decision,reason"
// with outer_active as 0/1 and "-" for a missing phase.
std::string format_trace_record(const TraceRecord& r);

// Inverse of format_trace_record. Throws std::invalid_argument.
TraceRecord parse_trace_record(std::string_view line);

}  // namespace preomp::decider

#endif  // PREOMP_DECIDER_TRACE_H_
