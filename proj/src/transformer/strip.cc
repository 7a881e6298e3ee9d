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

#include "preomp/transformer/strip.h"

#include <fmt/format.h>

#include "omp_pragma.h"
#include "preomp/frontend/evaluate.h"
#include "preomp/frontend/printer.h"
#include "preomp/frontend/walk.h"
#include "preomp/transformer/transform.h"

namespace preomp::transformer {

using namespace frontend;

namespace {

[[noreturn]] void malformed(const SourceSpan& span, std::string_view what) {
  throw InstrumentationError(
      fmt::format("{}: malformed instrumentation: {}", to_string(span), what));
}

std::optional<std::string> runtime_call(const Stmt& s) {
  const auto* e = std::get_if<ExprStmt>(&s.node);
  if (!e) return std::nullopt;
  auto name = callee_name(e->expr);
  if (name && (*name == kDecideFunction || *name == kEnterFunction ||
               *name == kExitFunction)) {
    return name;
  }
  return std::nullopt;
}

bool is_call_to(const Stmt& s, std::string_view fn, int id) {
  const auto* e = std::get_if<ExprStmt>(&s.node);
  if (!e || callee_name(e->expr) != fn || e->expr.operands.size() != 2) {
    return false;
  }
  return evaluate_integer(e->expr.operands[1]) == id;
}

bool is_decide_call(const Expr& e) {
  return callee_name(e) == kDecideFunction;
}

class Stripper {
 public:
  explicit Stripper(BranchSelection selection) : selection_(selection) {}

  Stmt strip(const Stmt& s) {
    return std::visit(
        Overloaded{
            [&](const VersionedLoop& v) -> Stmt {
              Stmt out = strip(*v.lowered);
              if (!std::holds_alternative<ForStmt>(out.node)) {
                malformed(v.origin, "versioned loop did not lower to a loop");
              }
              return out;
            },
            [&](const IfStmt& i) -> Stmt {
              if (is_decide_call(i.cond)) return strip_duplicate(i, s.span);
              IfStmt copy = i;
              copy.then_branch = strip(*i.then_branch);
              if (i.else_branch) copy.else_branch.emplace(strip(**i.else_branch));
              return {std::move(copy), s.span};
            },
            [&](const Block& b) -> Stmt {
              if (!b.items.empty() && runtime_call(b.items.front()) ==
                                          std::string(kEnterFunction)) {
                return strip_ompif(b, s.span);
              }
              Block out;
              for (const Stmt& item : b.items) {
                if (runtime_call(item)) {
                  malformed(item.span, "runtime call outside a decision site");
                }
                out.items.push_back(strip(item));
              }
              return {std::move(out), s.span};
            },
            [&](const ForStmt& f) -> Stmt {
              ForStmt copy = f;
              copy.body = strip(*f.body);
              return {std::move(copy), s.span};
            },
            [&](const WhileStmt& w) -> Stmt {
              WhileStmt copy = w;
              copy.body = strip(*w.body);
              return {std::move(copy), s.span};
            },
            [&](const ExprStmt&) -> Stmt {
              if (runtime_call(s)) {
                malformed(s.span, "runtime call outside a decision site");
              }
              return s;
            },
            [&](const auto&) -> Stmt { return s; },
        },
        s.node);
  }

 private:
  // Decision call arguments: (id, init, bound, step, threshold).
  static std::pair<int, Expr> decision_site(const Expr& decide,
                                            const SourceSpan& span) {
    if (decide.operands.size() != 6) {
      malformed(span, fmt::format("{} takes 5 arguments", kDecideFunction));
    }
    auto id = evaluate_integer(decide.operands[1]);
    if (!id) malformed(span, "loop id is not a constant");
    return {static_cast<int>(*id), decide.operands[5]};
  }

  // [enter(id), (pragma)?, for, exit(id)] -> the for loop with its directive.
  Stmt unwrap_branch(const Stmt& branch, int id, bool expect_pragma,
                     const Expr& threshold, const SourceSpan& span) {
    const auto* block = std::get_if<Block>(&branch.node);
    std::size_t expected = expect_pragma ? 4 : 3;
    if (!block || block->items.size() != expected) {
      malformed(span, "decision branch has the wrong shape");
    }
    const auto& items = block->items;
    if (!is_call_to(items.front(), kEnterFunction, id) ||
        !is_call_to(items.back(), kExitFunction, id)) {
      malformed(span, "unbalanced enter/exit calls");
    }
    Directive directive;
    directive.site = id;
    directive.threshold = threshold;
    directive.threshold_explicit = !(threshold == make_float("1.0"));
    if (expect_pragma) {
      const auto* pp = std::get_if<PpStmt>(&items[1].node);
      auto pragma = pp ? parse_omp_parallel_for(pp->text) : std::nullopt;
      if (!pragma) malformed(span, "missing omp parallel for pragma");
      directive.clauses = pragma->clauses;
    }
    const Stmt& loop = items[expect_pragma ? 2 : 1];
    Stmt out = strip(loop);
    auto* f = std::get_if<ForStmt>(&out.node);
    if (!f) malformed(span, "decision branch does not hold a for loop");
    f->directive = std::move(directive);
    return out;
  }

  Stmt strip_duplicate(const IfStmt& i, const SourceSpan& span) {
    auto [id, threshold] = decision_site(i.cond, span);
    if (!i.else_branch) malformed(span, "decision without a serial branch");
    Stmt parallel = unwrap_branch(*i.then_branch, id, true, threshold, span);
    Stmt serial = unwrap_branch(**i.else_branch, id, false, threshold, span);
    // The serial branch carries no pragma; clauses come from the parallel one.
    std::get<ForStmt>(serial.node).directive->clauses =
        std::get<ForStmt>(parallel.node).directive->clauses;
    return selection_ == BranchSelection::kParallel ? parallel : serial;
  }

  Stmt strip_ompif(const Block& b, const SourceSpan& span) {
    if (b.items.size() != 4) malformed(span, "ompif block has the wrong shape");
    const auto* pp = std::get_if<PpStmt>(&b.items[1].node);
    auto pragma = pp ? parse_omp_parallel_for(pp->text) : std::nullopt;
    if (!pragma || !pragma->if_clause || !is_decide_call(*pragma->if_clause)) {
      malformed(span, "ompif pragma without a decision call");
    }
    auto [id, threshold] = decision_site(*pragma->if_clause, span);
    return unwrap_branch({b, span}, id, true, threshold, span);
  }

  BranchSelection selection_;
};

}  // namespace

SyntaxTree strip_instrumentation(const SyntaxTree& emitted,
                                 BranchSelection selection) {
  Stripper stripper(selection);
  std::string include = fmt::format("#include \"{}\"", kRuntimeHeader);
  SyntaxTree out;
  for (const TopLevel& item : emitted.items) {
    if (const auto* pp = std::get_if<PpLine>(&item.node);
        pp && pp->text == include) {
      continue;
    }
    TopLevel copy = item;
    if (auto* fn = std::get_if<Function>(&copy.node); fn && fn->body) {
      for (Stmt& s : fn->body->items) s = stripper.strip(s);
    }
    out.items.push_back(std::move(copy));
  }
  return out;
}

}  // namespace preomp::transformer
