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

#ifndef PREOMP_FRONTEND_EVALUATE_H_
#define PREOMP_FRONTEND_EVALUATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "preomp/frontend/ast.h"

namespace preomp::frontend {

using Bindings = std::map<std::string, std::int64_t, std::less<>>;

// Integer value of `e` with C semantics (truncating division) for literals,
// bound identifiers, parentheses, casts to integer types, unary +/-/!, and
// arithmetic/relational/logical binary operators. nullopt when the value
// depends on anything else (calls, unbound names, division by zero).
std::optional<std::int64_t> evaluate_integer(const Expr& e,
                                             const Bindings& env = {});

// Real value for constant expressions (threshold clauses). Integer
// sub-expressions follow C promotion loosely: any float operand makes the
// operation real.
std::optional<double> evaluate_real(const Expr& e, const Bindings& env = {});

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_EVALUATE_H_
