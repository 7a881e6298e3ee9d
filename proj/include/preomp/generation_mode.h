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

#ifndef PREOMP_GENERATION_MODE_H_
#define PREOMP_GENERATION_MODE_H_

#include <optional>
#include <string_view>

namespace preomp {

// How a directive loop is lowered to OpenMP C.
//   kDuplicate: serial and parallel copies selected by an if/else.
//   kOmpIf:     one copy whose `omp parallel for` carries an if() clause.
enum class GenerationMode { kDuplicate, kOmpIf };

constexpr std::string_view to_string(GenerationMode m) {
  return m == GenerationMode::kDuplicate ? "duplicate" : "ompif";
}

constexpr std::optional<GenerationMode> parse_generation_mode(
    std::string_view s) {
  if (s == "duplicate") return GenerationMode::kDuplicate;
  if (s == "ompif") return GenerationMode::kOmpIf;
  return std::nullopt;
}

}  // namespace preomp

#endif  // PREOMP_GENERATION_MODE_H_
