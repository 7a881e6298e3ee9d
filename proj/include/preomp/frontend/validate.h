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

#ifndef PREOMP_FRONTEND_VALIDATE_H_
#define PREOMP_FRONTEND_VALIDATE_H_

#include <vector>

#include "preomp/frontend/ast.h"
#include "preomp/frontend/diagnostics.h"

namespace preomp::frontend {

// Checks a tree for transpilability. Errors: stray directives, loops not in
// canonical form, undeclared or repeated clause identifiers, a non-positive
// constant threshold. Warnings: loops with zero static iterations, clause
// identifiers redeclared inside the loop. Sorted by source position.
std::vector<Diagnostic> validate(const SyntaxTree& tree);

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_VALIDATE_H_
