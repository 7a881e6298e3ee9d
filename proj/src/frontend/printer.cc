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

#include "preomp/frontend/printer.h"

#include <fmt/format.h>

#include "preomp/frontend/walk.h"

namespace preomp::frontend {
namespace {

std::string pad(int indent) { return std::string(2 * indent, ' '); }

std::string print_dims(const std::vector<std::optional<Expr>>& dims) {
  std::string out;
  for (const auto& d : dims) out += "[" + (d ? print_expr(*d) : "") + "]";
  return out;
}

std::string print_decl(const Decl& decl) {
  std::vector<std::string> parts;
  for (const Declarator& d : decl.declarators) {
    std::string s = std::string(d.pointers, '*') + d.name + print_dims(d.dims);
    if (d.init) s += " = " + print_expr(*d.init);
    parts.push_back(std::move(s));
  }
  return fmt::format("{} {};", to_string(decl.type), fmt::join(parts, ", "));
}

// Text following a statement header such as `for (...)`: either ` {` ... `}`
// for blocks or a newline and the indented statement. No trailing newline.
std::string print_body(const Stmt& body, int indent) {
  if (const auto* b = std::get_if<Block>(&body.node)) {
    std::string out = " {\n";
    for (const Stmt& s : b->items) out += print_stmt(s, indent + 1);
    return out + pad(indent) + "}";
  }
  std::string out = "\n" + print_stmt(body, indent + 1);
  out.pop_back();
  return out;
}

std::string print_for_header(const ForStmt& f) {
  std::string init = std::visit(
      Overloaded{
          [](const std::monostate&) { return std::string(); },
          [](const Decl& d) {
            std::string s = print_decl(d);
            s.pop_back();
            return s;
          },
          [](const Expr& e) { return print_expr(e); },
      },
      f.init);
  std::string out = "for (" + init + ";";
  if (f.cond) out += " " + print_expr(*f.cond);
  out += ";";
  if (f.step) out += " " + print_expr(*f.step);
  return out + ")";
}

std::string print_function(const Function& fn) {
  std::string params;
  if (fn.void_params) {
    params = "void";
  } else {
    std::vector<std::string> parts;
    for (const Param& p : fn.params) {
      std::string declarator = std::string(p.pointers, '*') + p.name;
      parts.push_back(fmt::format("{}{}{}{}", to_string(p.type),
                                  declarator.empty() ? "" : " ", declarator,
                                  print_dims(p.dims)));
    }
    params = fmt::format("{}", fmt::join(parts, ", "));
  }
  std::string out =
      fmt::format("{} {}({})", to_string(fn.return_type), fn.name, params);
  if (!fn.body) return out + ";\n";
  out += " {\n";
  for (const Stmt& s : fn.body->items) out += print_stmt(s, 1);
  return out + "}\n";
}

bool needs_separator(const TopLevel& prev, const TopLevel& next) {
  auto is_definition = [](const TopLevel& t) {
    const auto* f = std::get_if<Function>(&t.node);
    return f && f->body;
  };
  return is_definition(prev) || is_definition(next) ||
         prev.node.index() != next.node.index();
}

}  // namespace

std::string print_expr(const Expr& e) {
  const auto& ops = e.operands;
  switch (e.kind) {
    case ExprKind::kIntLiteral:
    case ExprKind::kFloatLiteral:
    case ExprKind::kStringLiteral:
    case ExprKind::kCharLiteral:
    case ExprKind::kIdentifier:
      return e.text;
    case ExprKind::kParen:
      return "(" + print_expr(ops[0]) + ")";
    case ExprKind::kUnary: {
      std::string operand = print_expr(ops[0]);
      // Keep `- -x` from fusing into `--x` (likewise `& &x`).
      bool fuse = !operand.empty() && operand[0] == e.text.back() &&
                  (operand[0] == '+' || operand[0] == '-' || operand[0] == '&');
      return e.text + (fuse ? " " : "") + operand;
    }
    case ExprKind::kPostfix:
      return print_expr(ops[0]) + e.text;
    case ExprKind::kBinary:
    case ExprKind::kAssign:
      return fmt::format("{} {} {}", print_expr(ops[0]), e.text,
                         print_expr(ops[1]));
    case ExprKind::kConditional:
      return fmt::format("{} ? {} : {}", print_expr(ops[0]),
                         print_expr(ops[1]), print_expr(ops[2]));
    case ExprKind::kCall: {
      std::vector<std::string> args;
      for (std::size_t i = 1; i < ops.size(); ++i) {
        args.push_back(print_expr(ops[i]));
      }
      return fmt::format("{}({})", print_expr(ops[0]), fmt::join(args, ", "));
    }
    case ExprKind::kIndex:
      return fmt::format("{}[{}]", print_expr(ops[0]), print_expr(ops[1]));
    case ExprKind::kCast:
      return fmt::format("({}){}", e.text, print_expr(ops[0]));
    case ExprKind::kMember:
      return print_expr(ops[0]) + e.text;
    case ExprKind::kInitList: {
      std::vector<std::string> items;
      for (const Expr& op : ops) items.push_back(print_expr(op));
      return fmt::format("{{{}}}", fmt::join(items, ", "));
    }
  }
  return {};
}

std::string print_data_clauses(const std::vector<DataClause>& clauses) {
  std::vector<std::string> parts;
  for (const DataClause& c : clauses) {
    parts.push_back(
        fmt::format("{}({})", to_string(c.kind), fmt::join(c.names, ", ")));
  }
  return fmt::format("{}", fmt::join(parts, " "));
}

std::string print_directive(const Directive& d) {
  std::string out = "#pragma preomp parallel for";
  std::string clauses = print_data_clauses(d.clauses);
  if (!clauses.empty()) out += " " + clauses;
  if (d.threshold_explicit) {
    out += " parallel_threshold(" + print_expr(d.threshold) + ")";
  }
  return out;
}

std::string print_stmt(const Stmt& s, int indent) {
  const std::string p = pad(indent);
  return std::visit(
      Overloaded{
          [&](const Block& b) {
            std::string out = p + "{\n";
            for (const Stmt& item : b.items) out += print_stmt(item, indent + 1);
            return out + p + "}\n";
          },
          [&](const ExprStmt& e) { return p + print_expr(e.expr) + ";\n"; },
          [&](const DeclStmt& d) { return p + print_decl(d.decl) + "\n"; },
          [&](const ForStmt& f) {
            std::string out;
            if (f.directive) out += p + print_directive(*f.directive) + "\n";
            return out + p + print_for_header(f) + print_body(*f.body, indent) +
                   "\n";
          },
          [&](const IfStmt& i) {
            std::string out = p + "if (" + print_expr(i.cond) + ")" +
                              print_body(*i.then_branch, indent);
            if (i.else_branch) {
              bool then_block =
                  std::holds_alternative<Block>(i.then_branch->node);
              out += then_block ? " else" : "\n" + p + "else";
              const Stmt& e = **i.else_branch;
              if (std::holds_alternative<IfStmt>(e.node)) {
                // else-if chains stay on one line.
                out += " " + print_stmt(e, indent).substr(p.size());
                out.pop_back();
              } else {
                out += print_body(e, indent);
              }
            }
            return out + "\n";
          },
          [&](const WhileStmt& w) {
            return p + "while (" + print_expr(w.cond) + ")" +
                   print_body(*w.body, indent) + "\n";
          },
          [&](const ReturnStmt& r) {
            return p + (r.value ? "return " + print_expr(*r.value) : "return") +
                   ";\n";
          },
          [&](const BreakStmt&) { return p + "break;\n"; },
          [&](const ContinueStmt&) { return p + "continue;\n"; },
          [&](const EmptyStmt&) { return p + ";\n"; },
          [&](const PpStmt& pp) { return p + pp.text + "\n"; },
          [&](const StrayDirective& d) {
            return p + print_directive(d.directive) + "\n" +
                   print_stmt(*d.target, indent);
          },
          [&](const VersionedLoop& v) { return print_stmt(*v.lowered, indent); },
      },
      s.node);
}

std::string print_unit(const TranslationUnit& tu) {
  std::string out;
  for (std::size_t i = 0; i < tu.items.size(); ++i) {
    const TopLevel& item = tu.items[i];
    if (i > 0 && needs_separator(tu.items[i - 1], item)) out += "\n";
    out += std::visit(
        Overloaded{
            [](const PpLine& pp) { return pp.text + "\n"; },
            [](const Function& fn) { return print_function(fn); },
            [](const Decl& d) { return print_decl(d) + "\n"; },
        },
        item.node);
  }
  return out;
}

}  // namespace preomp::frontend
