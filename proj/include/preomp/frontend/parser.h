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

// Recursive-descent parser for the C subset accepted by the transpiler:
// function definitions and prototypes, file-scope declarations, scalar and
// array declarations, for/if/while/return/break/continue/block/expression
// statements, and C expressions without the comma operator. Preprocessor
// lines are kept verbatim. `#pragma preomp` lines are parsed into Directive
// nodes attached to the following for statement.

#ifndef PREOMP_FRONTEND_PARSER_H_
#define PREOMP_FRONTEND_PARSER_H_

#include <string_view>

#include "preomp/frontend/ast.h"

namespace preomp::frontend {

struct ParseOptions {
  // When false, a preomp directive in front of a non-for statement becomes a
  // StrayDirective node instead of a ParseError, so validate() can report it
  // alongside other diagnostics.
  bool strict = true;
};

// Throws ParseError on syntax errors, unknown directive clauses, and (when
// strict) directives that do not precede a for statement.
SyntaxTree parse_unit(std::string_view source, ParseOptions options = {});

// Parses a standalone expression, e.g. the contents of an OpenMP clause.
Expr parse_expression(std::string_view source);

// Parses the text of a `#pragma preomp ...` line.
Directive parse_directive(std::string_view pragma_line, SourceSpan span = {});

// True when the preprocessor line is a `#pragma preomp` directive.
bool is_preomp_pragma(std::string_view pp_line);

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_PARSER_H_
