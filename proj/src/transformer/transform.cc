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

#include "preomp/transformer/transform.h"

#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "omp_pragma.h"
#include "preomp/frontend/walk.h"

namespace preomp::transformer {

using namespace frontend;

namespace {

class Rewriter {
 public:
  Rewriter(std::span<const LoopDescriptor> descriptors, GenerationMode mode)
      : mode_(mode) {
    for (const LoopDescriptor& d : descriptors) by_id_[d.loop_id] = &d;
  }

  Stmt rewrite(const Stmt& s) {
    return std::visit(
        Overloaded{
            [&](const Block& b) -> Stmt {
              Block out;
              for (const Stmt& item : b.items) out.items.push_back(rewrite(item));
              return {std::move(out), s.span};
            },
            [&](const ForStmt& f) -> Stmt {
              ForStmt copy{f.init, f.cond, f.step, rewrite(*f.body),
                           std::nullopt};
              if (!f.directive) return {std::move(copy), s.span};
              return lower(std::move(copy), *f.directive, s.span);
            },
            [&](const IfStmt& i) -> Stmt {
              IfStmt copy = i;
              copy.then_branch = rewrite(*i.then_branch);
              if (i.else_branch) copy.else_branch.emplace(rewrite(**i.else_branch));
              return {std::move(copy), s.span};
            },
            [&](const WhileStmt& w) -> Stmt {
              WhileStmt copy = w;
              copy.body = rewrite(*w.body);
              return {std::move(copy), s.span};
            },
            [&](const StrayDirective& d) -> Stmt {
              throw std::invalid_argument(
                  fmt::format("{}: stray preomp directive cannot be transformed",
                              to_string(d.directive.span)));
            },
            [&](const auto&) -> Stmt { return s; },
        },
        s.node);
  }

 private:
  Stmt lower(ForStmt loop, const Directive& directive, SourceSpan span) {
    auto it = by_id_.find(directive.site);
    if (it == by_id_.end()) {
      throw std::invalid_argument(fmt::format(
          "{}: no loop descriptor for directive site {}", to_string(span),
          directive.site));
    }
    const LoopDescriptor& desc = *it->second;
    const int id = desc.loop_id;

    Expr decide = make_call(std::string(kDecideFunction),
                            {make_int(id), desc.init, desc.exclusive_bound(),
                             desc.step, directive.threshold});
    auto call_stmt = [id](std::string_view fn) {
      return make_stmt(make_call(std::string(fn), {make_int(id)}));
    };
    Stmt body{std::move(loop), span};
    OmpParallelFor pragma{directive.clauses, std::nullopt};

    Stmt lowered = make_block({});
    if (mode_ == GenerationMode::kDuplicate) {
      Stmt parallel = make_block({call_stmt(kEnterFunction),
                                  Stmt{PpStmt{print_omp_parallel_for(pragma)}, {}},
                                  body, call_stmt(kExitFunction)});
      Stmt serial = make_block(
          {call_stmt(kEnterFunction), body, call_stmt(kExitFunction)});
      lowered = Stmt{IfStmt{std::move(decide), std::move(parallel),
                            Box<Stmt>(std::move(serial))},
                     span};
    } else {
      pragma.if_clause = std::move(decide);
      lowered = make_block({call_stmt(kEnterFunction),
                            Stmt{PpStmt{print_omp_parallel_for(pragma)}, {}},
                            std::move(body), call_stmt(kExitFunction)});
    }
    return {VersionedLoop{id, desc.nest_id, desc.depth, mode_, span,
                          std::move(lowered)},
            span};
  }

  std::map<int, const LoopDescriptor*> by_id_;
  GenerationMode mode_;
};

}  // namespace

SyntaxTree transform(const SyntaxTree& tree,
                     std::span<const LoopDescriptor> descriptors,
                     GenerationMode mode) {
  Rewriter rewriter(descriptors, mode);
  SyntaxTree out = tree;
  for (TopLevel& item : out.items) {
    auto* fn = std::get_if<Function>(&item.node);
    if (!fn || !fn->body) continue;
    for (Stmt& s : fn->body->items) s = rewriter.rewrite(s);
  }
  return out;
}

}  // namespace preomp::transformer
