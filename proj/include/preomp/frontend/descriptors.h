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

#ifndef PREOMP_FRONTEND_DESCRIPTORS_H_
#define PREOMP_FRONTEND_DESCRIPTORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preomp/frontend/ast.h"
#include "preomp/frontend/diagnostics.h"
#include "preomp/frontend/evaluate.h"
#include "preomp/iteration_space.h"

namespace preomp::frontend {

// Iteration space of one directive loop, in the canonical form
// `for (v = init; v < bound; v += step)` (or `<=`).
struct LoopDescriptor {
  int loop_id = 0;
  std::string induction_variable;
  Expr init;
  Expr bound;
  Expr step;
  Comparison comparison = Comparison::kLess;
  // Number of enclosing directive loops.
  int depth = 0;
  // Dense index of this nest (a depth-0 directive loop and everything
  // beneath it) in lexical order.
  int nest_id = 0;
  SourceSpan span;
  Directive directive;

  // Bound of the equivalent half-open range: `bound` for `<`, `(bound) + 1`
  // for `<=`.
  Expr exclusive_bound() const;

  // Trip count under `env`; nullopt when an expression cannot be evaluated.
  std::optional<std::int64_t> iteration_count(const Bindings& env = {}) const;
};

struct DescriptorSet {
  // One entry per accepted directive site, in loop_id order.
  std::vector<LoopDescriptor> loops;
  // One error per rejected directive site.
  std::vector<Diagnostic> errors;
};

// Loop analysis for every directive site. Sites whose loop is not in
// canonical form (compound condition, non-increasing step, induction
// variable written in the body, bound depending on the induction variable)
// are rejected with an error diagnostic.
DescriptorSet extract_descriptors(const SyntaxTree& tree);

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_DESCRIPTORS_H_
