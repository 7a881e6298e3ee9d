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

#ifndef PREOMP_ITERATION_SPACE_H_
#define PREOMP_ITERATION_SPACE_H_

#include <cstdint>
#include <string_view>

namespace preomp {

// Loop-exit comparison of a canonical `for` header.
enum class Comparison { kLess, kLessEqual };

constexpr std::string_view to_string(Comparison c) {
  return c == Comparison::kLess ? "<" : "<=";
}

// Trip count of `for (v = init; v < bound; v += step)`. Non-positive steps and
// empty ranges yield zero.
constexpr std::int64_t iteration_count(std::int64_t init, std::int64_t bound,
                                       std::int64_t step) {
  if (step <= 0 || bound <= init) return 0;
  return (bound - init + step - 1) / step;
}

// Same, honouring the header's comparison. `<=` is the half-open range with
// bound + 1.
constexpr std::int64_t iteration_count(std::int64_t init, std::int64_t bound,
                                       std::int64_t step, Comparison c) {
  return iteration_count(init, c == Comparison::kLessEqual ? bound + 1 : bound,
                         step);
}

}  // namespace preomp

#endif  // PREOMP_ITERATION_SPACE_H_
