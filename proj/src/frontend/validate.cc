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

#include "preomp/frontend/validate.h"

#include <algorithm>
#include <set>
#include <string>

#include <fmt/format.h>

#include "preomp/frontend/descriptors.h"
#include "preomp/frontend/evaluate.h"
#include "preomp/frontend/walk.h"

namespace preomp::frontend {

std::string format_diagnostic(const Diagnostic& d) {
  return fmt::format("{}: {}: {}", to_string(d.span),
                     d.severity == Severity::kError ? "error" : "warning",
                     d.message);
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

ParseError::ParseError(SourceSpan span, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(span), message)),
      span_(span),
      message_(message) {}

namespace {

std::set<std::string> names_declared_in(const Stmt& body) {
  std::set<std::string> names;
  auto add = [&](const Decl& d) {
    for (const auto& decl : d.declarators) names.insert(decl.name);
  };
  for_each_stmt(body, [&](const Stmt& s) {
    if (const auto* d = std::get_if<DeclStmt>(&s.node)) add(d->decl);
    if (const auto* f = std::get_if<ForStmt>(&s.node)) {
      if (const auto* d = std::get_if<Decl>(&f->init)) add(*d);
    }
  });
  return names;
}

class ScopeChecker {
 public:
  explicit ScopeChecker(std::vector<Diagnostic>& out) : out_(out) {}

  void run(const SyntaxTree& tree) {
    scopes_.emplace_back();
    for (const auto& item : tree.items) {
      if (const auto* d = std::get_if<Decl>(&item.node)) declare(*d);
      const auto* fn = std::get_if<Function>(&item.node);
      if (!fn) continue;
      scopes_.back().insert(fn->name);
      if (!fn->body) continue;
      scopes_.emplace_back();
      for (const Param& p : fn->params) scopes_.back().insert(p.name);
      for (const Stmt& s : fn->body->items) visit(s);
      scopes_.pop_back();
    }
  }

 private:
  void declare(const Decl& d) {
    for (const auto& decl : d.declarators) scopes_.back().insert(decl.name);
  }

  bool visible(const std::string& name) const {
    return std::any_of(scopes_.begin(), scopes_.end(),
                       [&](const auto& s) { return s.count(name) > 0; });
  }

  void check_directive(const Directive& d, const ForStmt* loop) {
    std::set<std::string> seen;
    std::set<std::string> inner =
        loop ? names_declared_in(*loop->body) : std::set<std::string>{};
    for (const DataClause& c : d.clauses) {
      for (const std::string& name : c.names) {
        if (!seen.insert(name).second) {
          out_.push_back({Severity::kError, c.span,
                          fmt::format("'{}' appears in more than one data "
                                      "clause",
                                      name)});
        }
        if (!visible(name)) {
          out_.push_back({Severity::kError, c.span,
                          fmt::format("'{}' in {} clause is not declared", name,
                                      to_string(c.kind))});
        } else if (inner.count(name)) {
          out_.push_back({Severity::kWarning, c.span,
                          fmt::format("'{}' in {} clause is shadowed by a "
                                      "declaration inside the loop",
                                      name, to_string(c.kind))});
        }
      }
    }
    if (auto t = evaluate_real(d.threshold); t && *t <= 0) {
      out_.push_back({Severity::kError, d.span,
                      "parallel_threshold must be positive"});
    }
  }

  void visit(const Stmt& s) {
    std::visit(
        Overloaded{
            [&](const Block& b) {
              scopes_.emplace_back();
              for (const Stmt& item : b.items) visit(item);
              scopes_.pop_back();
            },
            [&](const DeclStmt& d) { declare(d.decl); },
            [&](const ForStmt& f) {
              scopes_.emplace_back();
              if (const auto* d = std::get_if<Decl>(&f.init)) declare(*d);
              if (f.directive) check_directive(*f.directive, &f);
              visit(*f.body);
              scopes_.pop_back();
            },
            [&](const IfStmt& i) {
              visit(*i.then_branch);
              if (i.else_branch) visit(**i.else_branch);
            },
            [&](const WhileStmt& w) { visit(*w.body); },
            [&](const StrayDirective& d) {
              out_.push_back({Severity::kError, d.directive.span,
                              "preomp directive must precede a for statement"});
              check_directive(d.directive, nullptr);
              visit(*d.target);
            },
            [&](const VersionedLoop& v) { visit(*v.lowered); },
            [](const auto&) {},
        },
        s.node);
  }

  std::vector<Diagnostic>& out_;
  std::vector<std::set<std::string>> scopes_;
};

}  // namespace

std::vector<Diagnostic> validate(const SyntaxTree& tree) {
  std::vector<Diagnostic> out;
  DescriptorSet descriptors = extract_descriptors(tree);
  out.insert(out.end(), descriptors.errors.begin(), descriptors.errors.end());
  for (const LoopDescriptor& d : descriptors.loops) {
    if (auto n = d.iteration_count(); n && *n == 0) {
      out.push_back({Severity::kWarning, d.span,
                     fmt::format("loop over '{}' has zero iterations",
                                 d.induction_variable)});
    }
  }
  ScopeChecker(out).run(tree);
  std::stable_sort(out.begin(), out.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::pair(a.span.line, a.span.column) <
                            std::pair(b.span.line, b.span.column);
                   });
  return out;
}

}  // namespace preomp::frontend
