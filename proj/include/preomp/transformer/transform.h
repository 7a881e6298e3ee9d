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

#ifndef PREOMP_TRANSFORMER_TRANSFORM_H_
#define PREOMP_TRANSFORMER_TRANSFORM_H_

#include <span>
#include <string_view>

#include "preomp/frontend/ast.h"
#include "preomp/frontend/descriptors.h"
#include "preomp/generation_mode.h"

namespace preomp::transformer {

// Runtime entry points referenced by generated code (see preomp_rt.h).
inline constexpr std::string_view kDecideFunction = "preomp_decide";
inline constexpr std::string_view kEnterFunction = "preomp_enter";
inline constexpr std::string_view kExitFunction = "preomp_exit";
inline constexpr std::string_view kRuntimeHeader = "preomp_rt.h";

// Replaces every directive loop with a VersionedLoop.
//
// kDuplicate lowers loop L (id k) to
//
//   if (preomp_decide(k, init, bound, step, threshold)) {
//     preomp_enter(k);
//     #pragma omp parallel for <clauses>
//     L
//     preomp_exit(k);
//   } else {
//     preomp_enter(k);
//     L
//     preomp_exit(k);
//   }
//
// and kOmpIf to
//
//   {
//     preomp_enter(k);
//     #pragma omp parallel for <clauses> if(preomp_decide(...))
//     L
//     preomp_exit(k);
//   }
//
// where `bound` is the half-open bound and nested directive loops inside L are
// lowered recursively in every copy. Throws std::invalid_argument when a
// directive site has no descriptor or the tree contains a stray directive.
frontend::SyntaxTree transform(
    const frontend::SyntaxTree& tree,
    std::span<const frontend::LoopDescriptor> descriptors,
    GenerationMode mode);

}  // namespace preomp::transformer

#endif  // PREOMP_TRANSFORMER_TRANSFORM_H_
