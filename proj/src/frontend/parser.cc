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

#include "preomp/frontend/parser.h"

#include <fmt/format.h>

#include "preomp/frontend/diagnostics.h"
#include "preomp/frontend/lexer.h"

namespace preomp::frontend {
namespace {

int binary_precedence(const Token& t) {
  if (t.kind != TokenKind::kPunct) return 0;
  const std::string& op = t.text;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

bool is_assign_op(const Token& t) {
  if (t.kind != TokenKind::kPunct) return false;
  const std::string& op = t.text;
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
         op == "%=" || op == "<<=" || op == ">>=";
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kPpLine:
      return "preprocessor line";
    default:
      return fmt::format("'{}'", t.text);
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, ParseOptions options)
      : toks_(std::move(tokens)), options_(options) {}

  TranslationUnit parse_translation_unit() {
    TranslationUnit tu;
    while (!at(TokenKind::kEnd)) {
      const Token& t = peek();
      if (t.kind == TokenKind::kPpLine) {
        if (is_preomp_pragma(t.text)) {
          throw ParseError(t.span,
                           "preomp directive outside of a function body");
        }
        tu.items.push_back({PpLine{t.text}, t.span});
        ++pos_;
        continue;
      }
      tu.items.push_back(parse_external_declaration());
    }
    return tu;
  }

  Expr parse_standalone_expression() {
    Expr e = parse_expr();
    expect_end();
    return e;
  }

  Directive parse_directive_tokens(SourceSpan span) {
    Directive d;
    d.span = span;
    expect_word("pragma");
    expect_word("preomp");
    if (!(peek().text == "parallel" && peek(1).text == "for")) {
      throw ParseError(peek().span,
                       fmt::format("unknown preomp directive; expected "
                                   "'parallel for' but found {}",
                                   describe(peek())));
    }
    pos_ += 2;
    while (!at(TokenKind::kEnd)) {
      const Token& name = peek();
      if (name.kind != TokenKind::kIdentifier) {
        throw ParseError(name.span, fmt::format("expected clause name but found {}",
                                                describe(name)));
      }
      ++pos_;
      if (name.text == "private" || name.text == "shared") {
        DataClause clause;
        clause.kind = name.text == "private" ? ClauseKind::kPrivate
                                             : ClauseKind::kShared;
        clause.span = name.span;
        expect_punct("(");
        do {
          clause.names.push_back(expect_identifier().text);
        } while (accept_punct(","));
        expect_punct(")");
        d.clauses.push_back(std::move(clause));
      } else if (name.text == "parallel_threshold") {
        if (d.threshold_explicit) {
          throw ParseError(name.span, "duplicate parallel_threshold clause");
        }
        expect_punct("(");
        d.threshold = parse_expr();
        d.threshold_explicit = true;
        expect_punct(")");
      } else {
        throw ParseError(name.span,
                         fmt::format("unknown clause '{}'", name.text));
      }
    }
    return d;
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_punct(std::string_view p) const {
    return peek().kind == TokenKind::kPunct && peek().text == p;
  }
  bool at_keyword(std::string_view k) const {
    return peek().kind == TokenKind::kKeyword && peek().text == k;
  }
  bool at_type_keyword() const {
    return peek().kind == TokenKind::kKeyword && is_type_keyword(peek().text);
  }
  bool accept_punct(std::string_view p) {
    if (!at_punct(p)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail_expected(std::string_view what) const {
    throw ParseError(peek().span, fmt::format("expected {} but found {}", what,
                                              describe(peek())));
  }
  const Token& expect_punct(std::string_view p) {
    if (!at_punct(p)) fail_expected(fmt::format("'{}'", p));
    return toks_[pos_++];
  }
  const Token& expect_keyword(std::string_view k) {
    if (!at_keyword(k)) fail_expected(fmt::format("'{}'", k));
    return toks_[pos_++];
  }
  const Token& expect_identifier() {
    if (!at(TokenKind::kIdentifier)) fail_expected("identifier");
    return toks_[pos_++];
  }
  void expect_word(std::string_view w) {
    if (peek().text != w) fail_expected(fmt::format("'{}'", w));
    ++pos_;
  }
  void expect_end() {
    if (!at(TokenKind::kEnd)) fail_expected("end of input");
  }

  // ---- declarations ----
  TypeSpec parse_type() {
    TypeSpec type;
    while (at_type_keyword()) type.words.push_back(toks_[pos_++].text);
    if (type.words.empty()) fail_expected("type name");
    return type;
  }

  std::vector<std::optional<Expr>> parse_dims() {
    std::vector<std::optional<Expr>> dims;
    while (accept_punct("[")) {
      if (accept_punct("]")) {
        dims.emplace_back(std::nullopt);
        continue;
      }
      dims.emplace_back(parse_expr());
      expect_punct("]");
    }
    return dims;
  }

  int parse_pointers() {
    int n = 0;
    while (accept_punct("*")) ++n;
    return n;
  }

  Expr parse_initializer() {
    if (!at_punct("{")) return parse_assignment();
    Expr list{ExprKind::kInitList, "", {}, peek().span};
    ++pos_;
    while (!at_punct("}")) {
      list.operands.push_back(parse_initializer());
      if (!accept_punct(",")) break;
    }
    expect_punct("}");
    return list;
  }

  Declarator parse_declarator() {
    Declarator d;
    d.pointers = parse_pointers();
    const Token& name = expect_identifier();
    d.name = name.text;
    d.span = name.span;
    d.dims = parse_dims();
    if (accept_punct("=")) d.init = parse_initializer();
    return d;
  }

  // Declarators after the type, without the trailing ';'.
  Decl parse_decl_rest(TypeSpec type) {
    Decl decl{std::move(type), {}};
    do {
      decl.declarators.push_back(parse_declarator());
    } while (accept_punct(","));
    return decl;
  }

  TopLevel parse_external_declaration() {
    SourceSpan span = peek().span;
    TypeSpec type = parse_type();
    if (at(TokenKind::kIdentifier) && peek(1).kind == TokenKind::kPunct &&
        peek(1).text == "(") {
      Function fn;
      fn.return_type = std::move(type);
      fn.name = toks_[pos_++].text;
      expect_punct("(");
      if (at_keyword("void") && peek(1).text == ")") {
        ++pos_;
        fn.void_params = true;
      } else if (!at_punct(")")) {
        do {
          Param p;
          p.type = parse_type();
          p.pointers = parse_pointers();
          if (at(TokenKind::kIdentifier)) p.name = toks_[pos_++].text;
          p.dims = parse_dims();
          fn.params.push_back(std::move(p));
        } while (accept_punct(","));
      }
      expect_punct(")");
      if (!accept_punct(";")) fn.body = parse_block();
      return {std::move(fn), span};
    }
    Decl decl = parse_decl_rest(std::move(type));
    expect_punct(";");
    return {std::move(decl), span};
  }

  // ---- statements ----
  Block parse_block() {
    expect_punct("{");
    Block block;
    while (!at_punct("}")) {
      if (at(TokenKind::kEnd)) fail_expected("'}'");
      block.items.push_back(parse_statement());
    }
    ++pos_;
    return block;
  }

  Stmt parse_statement() {
    const Token& t = peek();
    SourceSpan span = t.span;
    if (t.kind == TokenKind::kPpLine) {
      ++pos_;
      if (is_preomp_pragma(t.text)) return parse_directed_statement(t);
      return {PpStmt{t.text}, span};
    }
    if (at_punct("{")) return {parse_block(), span};
    if (at_punct(";")) {
      ++pos_;
      return {EmptyStmt{}, span};
    }
    if (t.kind == TokenKind::kKeyword) {
      if (t.text == "for") return {parse_for(), span};
      if (t.text == "if") return {parse_if(), span};
      if (t.text == "while") return {parse_while(), span};
      if (t.text == "return") {
        ++pos_;
        ReturnStmt r;
        if (!at_punct(";")) r.value = parse_expr();
        expect_punct(";");
        return {std::move(r), span};
      }
      if (t.text == "break" || t.text == "continue") {
        bool is_break = t.text == "break";
        ++pos_;
        expect_punct(";");
        if (is_break) return {BreakStmt{}, span};
        return {ContinueStmt{}, span};
      }
      if (t.text == "else") fail_expected("statement");
      if (is_type_keyword(t.text)) {
        Decl decl = parse_decl_rest(parse_type());
        expect_punct(";");
        return {DeclStmt{std::move(decl)}, span};
      }
    }
    Expr e = parse_expr();
    expect_punct(";");
    return {ExprStmt{std::move(e)}, span};
  }

  Stmt parse_directed_statement(const Token& pragma) {
    Directive d = parse_directive(pragma.text, pragma.span);
    d.site = next_site_++;
    if (at(TokenKind::kEnd) || at_punct("}")) {
      throw ParseError(pragma.span,
                       "preomp directive must precede a for statement");
    }
    Stmt target = parse_statement();
    if (auto* f = std::get_if<ForStmt>(&target.node); f && !f->directive) {
      f->directive = std::move(d);
      target.span = pragma.span;
      return target;
    }
    if (options_.strict) {
      throw ParseError(pragma.span,
                       "preomp directive must precede a for statement");
    }
    return {StrayDirective{std::move(d), std::move(target)}, pragma.span};
  }

  ForStmt parse_for() {
    expect_keyword("for");
    expect_punct("(");
    std::variant<std::monostate, Decl, Expr> init;
    if (at_type_keyword()) {
      init = parse_decl_rest(parse_type());
    } else if (!at_punct(";")) {
      init = parse_expr();
    }
    expect_punct(";");
    std::optional<Expr> cond;
    if (!at_punct(";")) cond = parse_expr();
    expect_punct(";");
    std::optional<Expr> step;
    if (!at_punct(")")) step = parse_expr();
    expect_punct(")");
    Stmt body = parse_statement();
    return ForStmt{std::move(init), std::move(cond), std::move(step),
                   std::move(body), std::nullopt};
  }

  IfStmt parse_if() {
    expect_keyword("if");
    expect_punct("(");
    Expr cond = parse_expr();
    expect_punct(")");
    Stmt then_branch = parse_statement();
    std::optional<Box<Stmt>> else_branch;
    if (at_keyword("else")) {
      ++pos_;
      else_branch.emplace(parse_statement());
    }
    return IfStmt{std::move(cond), std::move(then_branch),
                  std::move(else_branch)};
  }

  WhileStmt parse_while() {
    expect_keyword("while");
    expect_punct("(");
    Expr cond = parse_expr();
    expect_punct(")");
    return WhileStmt{std::move(cond), parse_statement()};
  }

  // ---- expressions ----
  Expr parse_expr() { return parse_assignment(); }

  Expr parse_assignment() {
    Expr lhs = parse_conditional();
    if (is_assign_op(peek())) {
      const Token& op = toks_[pos_++];
      Expr rhs = parse_assignment();
      return Expr{ExprKind::kAssign, op.text, {std::move(lhs), std::move(rhs)},
                  op.span};
    }
    return lhs;
  }

  Expr parse_conditional() {
    Expr cond = parse_binary(1);
    if (!at_punct("?")) return cond;
    SourceSpan span = toks_[pos_++].span;
    Expr if_true = parse_expr();
    expect_punct(":");
    Expr if_false = parse_conditional();
    return Expr{ExprKind::kConditional,
                "",
                {std::move(cond), std::move(if_true), std::move(if_false)},
                span};
  }

  Expr parse_binary(int min_prec) {
    Expr lhs = parse_unary();
    while (true) {
      int prec = binary_precedence(peek());
      if (prec < min_prec || prec == 0) return lhs;
      const Token& op = toks_[pos_++];
      Expr rhs = parse_binary(prec + 1);
      lhs = Expr{ExprKind::kBinary, op.text, {std::move(lhs), std::move(rhs)},
                 op.span};
    }
  }

  Expr parse_unary() {
    const Token& t = peek();
    if (t.kind == TokenKind::kPunct &&
        (t.text == "-" || t.text == "+" || t.text == "!" || t.text == "~" ||
         t.text == "*" || t.text == "&" || t.text == "++" || t.text == "--")) {
      ++pos_;
      return Expr{ExprKind::kUnary, t.text, {parse_unary()}, t.span};
    }
    if (at_punct("(") && peek(1).kind == TokenKind::kKeyword &&
        is_type_keyword(peek(1).text)) {
      ++pos_;
      std::string type = to_string(parse_type());
      if (int stars = parse_pointers()) type += " " + std::string(stars, '*');
      expect_punct(")");
      return Expr{ExprKind::kCast, std::move(type), {parse_unary()}, t.span};
    }
    return parse_postfix();
  }

  Expr parse_postfix() {
    Expr e = parse_primary();
    while (true) {
      const Token& t = peek();
      if (at_punct("(")) {
        ++pos_;
        Expr call{ExprKind::kCall, "", {std::move(e)}, t.span};
        if (!at_punct(")")) {
          do {
            call.operands.push_back(parse_assignment());
          } while (accept_punct(","));
        }
        expect_punct(")");
        e = std::move(call);
      } else if (at_punct("[")) {
        ++pos_;
        Expr index = parse_expr();
        expect_punct("]");
        e = Expr{ExprKind::kIndex, "", {std::move(e), std::move(index)},
                 t.span};
      } else if (at_punct(".") || at_punct("->")) {
        ++pos_;
        std::string member = t.text + expect_identifier().text;
        e = Expr{ExprKind::kMember, std::move(member), {std::move(e)}, t.span};
      } else if (at_punct("++") || at_punct("--")) {
        ++pos_;
        e = Expr{ExprKind::kPostfix, t.text, {std::move(e)}, t.span};
      } else {
        return e;
      }
    }
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kIdentifier:
        ++pos_;
        return Expr{ExprKind::kIdentifier, t.text, {}, t.span};
      case TokenKind::kInt:
        ++pos_;
        return Expr{ExprKind::kIntLiteral, t.text, {}, t.span};
      case TokenKind::kFloat:
        ++pos_;
        return Expr{ExprKind::kFloatLiteral, t.text, {}, t.span};
      case TokenKind::kString:
        ++pos_;
        return Expr{ExprKind::kStringLiteral, t.text, {}, t.span};
      case TokenKind::kChar:
        ++pos_;
        return Expr{ExprKind::kCharLiteral, t.text, {}, t.span};
      default:
        break;
    }
    if (at_punct("(")) {
      ++pos_;
      Expr inner = parse_expr();
      expect_punct(")");
      return Expr{ExprKind::kParen, "", {std::move(inner)}, t.span};
    }
    fail_expected("expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  int next_site_ = 0;
};

// Tokens of a pragma line body with spans shifted to absolute positions.
std::vector<Token> pragma_tokens(std::string_view line, SourceSpan span) {
  std::string_view body = line.substr(line.find('#') + 1);
  std::vector<Token> toks;
  try {
    toks = tokenize(body);
  } catch (const ParseError& e) {
    throw ParseError(span, e.message());
  }
  for (Token& t : toks) {
    t.span = SourceSpan{span.line, span.column + t.span.column};
  }
  return toks;
}

}  // namespace

bool is_preomp_pragma(std::string_view pp_line) {
  try {
    auto toks = tokenize(pp_line.substr(pp_line.find('#') + 1));
    return toks.size() >= 2 && toks[0].text == "pragma" &&
           toks[1].text == "preomp";
  } catch (const ParseError&) {
    return false;
  }
}

SyntaxTree parse_unit(std::string_view source, ParseOptions options) {
  return Parser(tokenize(source), options).parse_translation_unit();
}

Expr parse_expression(std::string_view source) {
  return Parser(tokenize(source), {}).parse_standalone_expression();
}

Directive parse_directive(std::string_view pragma_line, SourceSpan span) {
  return Parser(pragma_tokens(pragma_line, span), {})
      .parse_directive_tokens(span);
}

}  // namespace preomp::frontend
