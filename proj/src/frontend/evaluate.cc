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

#include "preomp/frontend/evaluate.h"

#include <charconv>
#include <cstdlib>

namespace preomp::frontend {
namespace {

std::optional<std::int64_t> parse_int_literal(std::string_view text) {
  while (!text.empty() && (text.back() == 'u' || text.back() == 'U' ||
                           text.back() == 'l' || text.back() == 'L')) {
    text.remove_suffix(1);
  }
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  } else if (text.size() > 1 && text[0] == '0') {
    base = 8;
    text.remove_prefix(1);
  }
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

bool is_integer_cast(const std::string& type) {
  return type.find('*') == std::string::npos &&
         type.find("double") == std::string::npos &&
         type.find("float") == std::string::npos &&
         type.find("void") == std::string::npos;
}

std::optional<std::int64_t> apply_integer(const std::string& op,
                                          std::int64_t a, std::int64_t b) {
  if (op == "+") return a + b;
  if (op == "-") return a - b;
  if (op == "*") return a * b;
  if (op == "/") return b == 0 ? std::nullopt : std::optional(a / b);
  if (op == "%") return b == 0 ? std::nullopt : std::optional(a % b);
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  if (op == ">=") return a >= b;
  if (op == "==") return a == b;
  if (op == "!=") return a != b;
  if (op == "&&") return a && b;
  if (op == "||") return a || b;
  if (op == "&") return a & b;
  if (op == "|") return a | b;
  if (op == "^") return a ^ b;
  if (op == "<<") return (b < 0 || b > 62) ? std::nullopt : std::optional(a << b);
  if (op == ">>") return (b < 0 || b > 62) ? std::nullopt : std::optional(a >> b);
  return std::nullopt;
}

}  // namespace

std::optional<std::int64_t> evaluate_integer(const Expr& e,
                                             const Bindings& env) {
  switch (e.kind) {
    case ExprKind::kIntLiteral:
      return parse_int_literal(e.text);
    case ExprKind::kIdentifier: {
      auto it = env.find(e.text);
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case ExprKind::kParen:
      return evaluate_integer(e.operands[0], env);
    case ExprKind::kCast:
      if (!is_integer_cast(e.text)) return std::nullopt;
      return evaluate_integer(e.operands[0], env);
    case ExprKind::kUnary: {
      auto v = evaluate_integer(e.operands[0], env);
      if (!v) return std::nullopt;
      if (e.text == "-") return -*v;
      if (e.text == "+") return *v;
      if (e.text == "!") return *v == 0;
      if (e.text == "~") return ~*v;
      return std::nullopt;
    }
    case ExprKind::kBinary: {
      auto a = evaluate_integer(e.operands[0], env);
      auto b = evaluate_integer(e.operands[1], env);
      if (!a || !b) return std::nullopt;
      return apply_integer(e.text, *a, *b);
    }
    case ExprKind::kConditional: {
      auto c = evaluate_integer(e.operands[0], env);
      if (!c) return std::nullopt;
      return evaluate_integer(e.operands[*c ? 1 : 2], env);
    }
    default:
      return std::nullopt;
  }
}

std::optional<double> evaluate_real(const Expr& e, const Bindings& env) {
  switch (e.kind) {
    case ExprKind::kFloatLiteral: {
      std::string s = e.text;
      while (!s.empty() && (s.back() == 'f' || s.back() == 'F' ||
                            s.back() == 'l' || s.back() == 'L')) {
        s.pop_back();
      }
      char* end = nullptr;
      double v = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size()) return std::nullopt;
      return v;
    }
    case ExprKind::kParen:
      return evaluate_real(e.operands[0], env);
    case ExprKind::kCast:
      return evaluate_real(e.operands[0], env);
    case ExprKind::kUnary: {
      auto v = evaluate_real(e.operands[0], env);
      if (!v) return std::nullopt;
      if (e.text == "-") return -*v;
      if (e.text == "+") return *v;
      return std::nullopt;
    }
    case ExprKind::kBinary: {
      auto a = evaluate_real(e.operands[0], env);
      auto b = evaluate_real(e.operands[1], env);
      if (!a || !b) return std::nullopt;
      // Integer-only subtrees keep C integer division.
      if (auto exact = evaluate_integer(e, env)) return double(*exact);
      if (e.text == "+") return *a + *b;
      if (e.text == "-") return *a - *b;
      if (e.text == "*") return *a * *b;
      if (e.text == "/") return *b == 0 ? std::nullopt : std::optional(*a / *b);
      return std::nullopt;
    }
    default: {
      auto v = evaluate_integer(e, env);
      if (!v) return std::nullopt;
      return double(*v);
    }
  }
}

}  // namespace preomp::frontend
