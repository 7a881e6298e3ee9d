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

#ifndef PREOMP_FRONTEND_PRINTER_H_
#define PREOMP_FRONTEND_PRINTER_H_

#include <string>

#include "preomp/frontend/ast.h"

namespace preomp::frontend {

// Canonical C text: two-space indentation, K&R braces, one blank line between
// file-scope items of different kinds and around function definitions.
// Output is a pure function of tree structure.
std::string print_unit(const TranslationUnit& tu);
std::string print_stmt(const Stmt& s, int indent = 0);
std::string print_expr(const Expr& e);

// `#pragma preomp parallel for ...` for the directive.
std::string print_directive(const Directive& d);

// "private(a, b)" style clause list, space separated; empty when no clauses.
std::string print_data_clauses(const std::vector<DataClause>& clauses);

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_PRINTER_H_
