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

#include "preomp/frontend/ast.h"

#include <fmt/format.h>

#include "preomp/frontend/walk.h"

namespace preomp::frontend {

std::string to_string(const SourceSpan& span) {
  return fmt::format("{}:{}", span.line, span.column);
}

Expr make_identifier(std::string name) {
  return Expr{ExprKind::kIdentifier, std::move(name), {}, {}};
}

Expr make_int(std::int64_t value) {
  return Expr{ExprKind::kIntLiteral, std::to_string(value), {}, {}};
}

Expr make_float(std::string spelling) {
  return Expr{ExprKind::kFloatLiteral, std::move(spelling), {}, {}};
}

Expr make_binary(std::string op, Expr lhs, Expr rhs) {
  return Expr{ExprKind::kBinary, std::move(op), {std::move(lhs), std::move(rhs)},
              {}};
}

Expr make_paren(Expr inner) {
  return Expr{ExprKind::kParen, "", {std::move(inner)}, {}};
}

Expr make_call(std::string callee, std::vector<Expr> args) {
  Expr call{ExprKind::kCall, "", {make_identifier(std::move(callee))}, {}};
  for (auto& a : args) call.operands.push_back(std::move(a));
  return call;
}

std::optional<std::string> callee_name(const Expr& e) {
  if (e.kind != ExprKind::kCall || e.operands.empty() ||
      e.operands[0].kind != ExprKind::kIdentifier) {
    return std::nullopt;
  }
  return e.operands[0].text;
}

std::string_view to_string(ClauseKind kind) {
  return kind == ClauseKind::kPrivate ? "private" : "shared";
}

std::string to_string(const TypeSpec& type) {
  return fmt::format("{}", fmt::join(type.words, " "));
}

Stmt make_stmt(Expr e) { return Stmt{ExprStmt{std::move(e)}, {}}; }

Stmt make_block(std::vector<Stmt> items) {
  return Stmt{Block{std::move(items)}, {}};
}

int count_directives(const SyntaxTree& tree) {
  int n = 0;
  for_each_stmt(tree, [&](const Stmt& s) {
    if (const auto* f = std::get_if<ForStmt>(&s.node); f && f->directive) ++n;
    if (std::holds_alternative<StrayDirective>(s.node)) ++n;
  });
  return n;
}

}  // namespace preomp::frontend
