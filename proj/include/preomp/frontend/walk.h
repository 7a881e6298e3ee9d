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

#ifndef PREOMP_FRONTEND_WALK_H_
#define PREOMP_FRONTEND_WALK_H_

#include <type_traits>
#include <variant>

#include "preomp/frontend/ast.h"

namespace preomp::frontend {

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Pre-order visit of `s` and every statement nested inside it.
template <typename Fn>
void for_each_stmt(const Stmt& s, Fn&& fn) {
  fn(s);
  std::visit(
      Overloaded{
          [&](const Block& b) {
            for (const auto& item : b.items) for_each_stmt(item, fn);
          },
          [&](const ForStmt& f) { for_each_stmt(*f.body, fn); },
          [&](const IfStmt& i) {
            for_each_stmt(*i.then_branch, fn);
            if (i.else_branch) for_each_stmt(**i.else_branch, fn);
          },
          [&](const WhileStmt& w) { for_each_stmt(*w.body, fn); },
          [&](const StrayDirective& d) { for_each_stmt(*d.target, fn); },
          [&](const VersionedLoop& v) { for_each_stmt(*v.lowered, fn); },
          [](const auto&) {},
      },
      s.node);
}

template <typename Fn>
void for_each_stmt(const TranslationUnit& tu, Fn&& fn) {
  for (const auto& item : tu.items) {
    if (const auto* f = std::get_if<Function>(&item.node); f && f->body) {
      for (const auto& s : f->body->items) for_each_stmt(s, fn);
    }
  }
}

// Pre-order visit of `e` and its operands.
template <typename Fn>
void for_each_expr(const Expr& e, Fn&& fn) {
  fn(e);
  for (const auto& op : e.operands) for_each_expr(op, fn);
}

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_WALK_H_
