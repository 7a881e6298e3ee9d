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

#include "preomp/frontend/descriptors.h"

#include <fmt/format.h>

#include "preomp/frontend/walk.h"

namespace preomp::frontend {
namespace {

// Signals a rejected directive site; converted to a Diagnostic.
struct Rejection {
  std::string message;
};

bool is_var(const Expr& e, const std::string& name) {
  return e.kind == ExprKind::kIdentifier && e.text == name;
}

bool mentions(const Expr& e, const std::string& name) {
  bool found = false;
  for_each_expr(e, [&](const Expr& sub) { found |= is_var(sub, name); });
  return found;
}

bool writes(const Expr& e, const std::string& name) {
  bool found = false;
  for_each_expr(e, [&](const Expr& sub) {
    if ((sub.kind == ExprKind::kAssign || sub.kind == ExprKind::kPostfix ||
         (sub.kind == ExprKind::kUnary &&
          (sub.text == "++" || sub.text == "--" || sub.text == "&"))) &&
        is_var(sub.operands[0], name)) {
      found = true;
    }
  });
  return found;
}

bool stmt_writes(const Stmt& body, const std::string& name) {
  bool found = false;
  auto check = [&](const Expr& e) { found |= writes(e, name); };
  for_each_stmt(body, [&](const Stmt& s) {
    std::visit(Overloaded{
                   [&](const ExprStmt& e) { check(e.expr); },
                   [&](const DeclStmt& d) {
                     for (const auto& decl : d.decl.declarators) {
                       if (decl.init) check(*decl.init);
                     }
                   },
                   [&](const ForStmt& f) {
                     if (const auto* e = std::get_if<Expr>(&f.init)) check(*e);
                     if (f.cond) check(*f.cond);
                     if (f.step) check(*f.step);
                   },
                   [&](const IfStmt& i) { check(i.cond); },
                   [&](const WhileStmt& w) { check(w.cond); },
                   [&](const ReturnStmt& r) {
                     if (r.value) check(*r.value);
                   },
                   [](const auto&) {},
               },
               s.node);
  });
  return found;
}

LoopDescriptor analyse(const ForStmt& loop) {
  LoopDescriptor d;

  // v = init
  if (const auto* decl = std::get_if<Decl>(&loop.init)) {
    if (decl->declarators.size() != 1 || !decl->declarators[0].init ||
        !decl->declarators[0].dims.empty()) {
      throw Rejection{"loop initialisation must declare a single variable "
                      "with an initial value"};
    }
    d.induction_variable = decl->declarators[0].name;
    d.init = *decl->declarators[0].init;
  } else if (const auto* e = std::get_if<Expr>(&loop.init);
             e && e->kind == ExprKind::kAssign && e->text == "=" &&
             e->operands[0].kind == ExprKind::kIdentifier) {
    d.induction_variable = e->operands[0].text;
    d.init = e->operands[1];
  } else {
    throw Rejection{"loop initialisation must have the form 'v = expr'"};
  }
  const std::string& v = d.induction_variable;
  if (mentions(d.init, v)) {
    throw Rejection{fmt::format("initial value of '{}' refers to itself", v)};
  }

  // v < bound | v <= bound
  if (!loop.cond) throw Rejection{"loop has no condition"};
  const Expr& cond = *loop.cond;
  if (cond.kind == ExprKind::kBinary && (cond.text == "&&" || cond.text == "||")) {
    throw Rejection{"compound loop condition is not supported"};
  }
  if (cond.kind != ExprKind::kBinary || !is_var(cond.operands[0], v) ||
      (cond.text != "<" && cond.text != "<=")) {
    throw Rejection{
        fmt::format("loop condition must have the form '{0} < expr' or "
                    "'{0} <= expr'",
                    v)};
  }
  d.comparison = cond.text == "<" ? Comparison::kLess : Comparison::kLessEqual;
  d.bound = cond.operands[1];
  if (mentions(d.bound, v)) {
    throw Rejection{fmt::format("loop bound depends on '{}'", v)};
  }

  // v++ | ++v | v += step | v = v + step
  if (!loop.step) throw Rejection{"loop has no increment"};
  const Expr& step = *loop.step;
  if ((step.kind == ExprKind::kPostfix || step.kind == ExprKind::kUnary) &&
      is_var(step.operands[0], v) && step.text == "++") {
    d.step = make_int(1);
  } else if (step.kind == ExprKind::kAssign && step.text == "+=" &&
             is_var(step.operands[0], v)) {
    d.step = step.operands[1];
  } else if (step.kind == ExprKind::kAssign && step.text == "=" &&
             is_var(step.operands[0], v) &&
             step.operands[1].kind == ExprKind::kBinary &&
             step.operands[1].text == "+" &&
             is_var(step.operands[1].operands[0], v)) {
    d.step = step.operands[1].operands[1];
  } else if (writes(step, v)) {
    throw Rejection{fmt::format(
        "non-monotonic step: '{}' must increase with '++' or '+='", v)};
  } else {
    throw Rejection{fmt::format("loop increment does not update '{}'", v)};
  }
  if (mentions(d.step, v)) {
    throw Rejection{fmt::format("loop step depends on '{}'", v)};
  }
  if (auto s = evaluate_integer(d.step); s && *s <= 0) {
    throw Rejection{fmt::format("non-monotonic step: step {} is not positive", *s)};
  }

  if (stmt_writes(*loop.body, v)) {
    throw Rejection{
        fmt::format("induction variable '{}' is modified in the loop body", v)};
  }
  return d;
}

class Extractor {
 public:
  DescriptorSet run(const SyntaxTree& tree) {
    for (const auto& item : tree.items) {
      if (const auto* f = std::get_if<Function>(&item.node); f && f->body) {
        for (const Stmt& s : f->body->items) visit(s, 0);
      }
    }
    return std::move(out_);
  }

 private:
  void visit(const Stmt& s, int depth) {
    std::visit(Overloaded{
                   [&](const Block& b) {
                     for (const Stmt& item : b.items) visit(item, depth);
                   },
                   [&](const ForStmt& f) {
                     if (!f.directive) {
                       visit(*f.body, depth);
                       return;
                     }
                     if (depth == 0) current_nest_ = next_nest_++;
                     record(f, s.span, depth);
                     visit(*f.body, depth + 1);
                   },
                   [&](const IfStmt& i) {
                     visit(*i.then_branch, depth);
                     if (i.else_branch) visit(**i.else_branch, depth);
                   },
                   [&](const WhileStmt& w) { visit(*w.body, depth); },
                   [&](const StrayDirective& d) { visit(*d.target, depth); },
                   [&](const VersionedLoop& v) { visit(*v.lowered, depth); },
                   [](const auto&) {},
               },
               s.node);
  }

  void record(const ForStmt& f, SourceSpan span, int depth) {
    try {
      LoopDescriptor d = analyse(f);
      d.loop_id = f.directive->site;
      d.depth = depth;
      d.nest_id = current_nest_;
      d.span = span;
      d.directive = *f.directive;
      out_.loops.push_back(std::move(d));
    } catch (const Rejection& r) {
      out_.errors.push_back({Severity::kError, span, r.message});
    }
  }

  DescriptorSet out_;
  int next_nest_ = 0;
  int current_nest_ = 0;
};

}  // namespace

Expr LoopDescriptor::exclusive_bound() const {
  if (comparison == Comparison::kLess) return bound;
  return make_binary("+", make_paren(bound), make_int(1));
}

std::optional<std::int64_t> LoopDescriptor::iteration_count(
    const Bindings& env) const {
  auto lo = evaluate_integer(init, env);
  auto hi = evaluate_integer(bound, env);
  auto st = evaluate_integer(step, env);
  if (!lo || !hi || !st) return std::nullopt;
  return preomp::iteration_count(*lo, *hi, *st, comparison);
}

DescriptorSet extract_descriptors(const SyntaxTree& tree) {
  return Extractor().run(tree);
}

}  // namespace preomp::frontend
