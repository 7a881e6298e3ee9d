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

// Syntax tree for the supported C subset.
//
// The tree is a value type: nodes own their children, copying a tree deep
// copies it, and operator== compares structure. Source spans are carried for
// diagnostics but never take part in comparisons, so a tree rebuilt from
// emitted text compares equal to the tree it was emitted from.
//
// Expressions use a single homogeneous node (kind + spelling + operands).
// Statements and top-level items are closed variants.

#ifndef PREOMP_FRONTEND_AST_H_
#define PREOMP_FRONTEND_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "preomp/generation_mode.h"

namespace preomp::frontend {

struct SourceSpan {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

std::string to_string(const SourceSpan& span);

// Owning pointer with value semantics, used for recursive members.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other)) {}
  Box(Box&& other) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other);
    return *this;
  }
  Box& operator=(Box&& other) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

enum class ExprKind {
  kIntLiteral,     // text = spelling
  kFloatLiteral,   // text = spelling
  kStringLiteral,  // text = spelling including quotes
  kCharLiteral,    // text = spelling including quotes
  kIdentifier,     // text = name
  kParen,          // operands = {inner}
  kUnary,          // text = prefix operator, operands = {operand}
  kPostfix,        // text = "++" | "--", operands = {operand}
  kBinary,         // text = operator, operands = {lhs, rhs}
  kAssign,         // text = "=", "+=", ..., operands = {target, value}
  kConditional,    // operands = {cond, if_true, if_false}
  kCall,           // operands = {callee, args...}
  kIndex,          // operands = {base, index}
  kCast,           // text = type spelling, operands = {operand}
  kMember,         // text = "." or "->" plus member name, operands = {base}
  kInitList,       // operands = elements
};

struct Expr {
  ExprKind kind = ExprKind::kIntLiteral;
  std::string text;
  std::vector<Expr> operands;
  SourceSpan span;

  friend bool operator==(const Expr&, const Expr&) = default;
};

Expr make_identifier(std::string name);
Expr make_int(std::int64_t value);
Expr make_float(std::string spelling);
Expr make_binary(std::string op, Expr lhs, Expr rhs);
Expr make_paren(Expr inner);
Expr make_call(std::string callee, std::vector<Expr> args);

// Name of the called function when `e` is a call through a plain identifier.
std::optional<std::string> callee_name(const Expr& e);

enum class ClauseKind { kPrivate, kShared };

std::string_view to_string(ClauseKind kind);

struct DataClause {
  ClauseKind kind = ClauseKind::kPrivate;
  std::vector<std::string> names;
  SourceSpan span;

  friend bool operator==(const DataClause&, const DataClause&) = default;
};

// `#pragma preomp parallel for [private(..)] [shared(..)]
//  [parallel_threshold(expr)]`.
struct Directive {
  // Lexical index of the directive within its translation unit.
  int site = -1;
  std::vector<DataClause> clauses;
  // Materialised as the literal 1.0 when the clause is absent.
  Expr threshold = make_float("1.0");
  // Whether the source spelled parallel_threshold(); affects printing only.
  bool threshold_explicit = false;
  SourceSpan span;

  friend bool operator==(const Directive& a, const Directive& b) {
    return a.site == b.site && a.clauses == b.clauses &&
           a.threshold == b.threshold;
  }
};

struct TypeSpec {
  std::vector<std::string> words;  // e.g. {"static", "double"}

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

std::string to_string(const TypeSpec& type);

struct Declarator {
  int pointers = 0;  // leading '*'s
  std::string name;
  std::vector<std::optional<Expr>> dims;
  std::optional<Expr> init;
  SourceSpan span;

  friend bool operator==(const Declarator&, const Declarator&) = default;
};

struct Decl {
  TypeSpec type;
  std::vector<Declarator> declarators;

  friend bool operator==(const Decl&, const Decl&) = default;
};

struct Stmt;

struct Block {
  std::vector<Stmt> items;
  friend bool operator==(const Block&, const Block&) = default;
};

struct ExprStmt {
  Expr expr;
  friend bool operator==(const ExprStmt&, const ExprStmt&) = default;
};

struct DeclStmt {
  Decl decl;
  friend bool operator==(const DeclStmt&, const DeclStmt&) = default;
};

struct ForStmt {
  std::variant<std::monostate, Decl, Expr> init;
  std::optional<Expr> cond;
  std::optional<Expr> step;
  Box<Stmt> body;
  std::optional<Directive> directive;

  friend bool operator==(const ForStmt&, const ForStmt&) = default;
};

struct IfStmt {
  Expr cond;
  Box<Stmt> then_branch;
  std::optional<Box<Stmt>> else_branch;
  friend bool operator==(const IfStmt&, const IfStmt&) = default;
};

struct WhileStmt {
  Expr cond;
  Box<Stmt> body;
  friend bool operator==(const WhileStmt&, const WhileStmt&) = default;
};

struct ReturnStmt {
  std::optional<Expr> value;
  friend bool operator==(const ReturnStmt&, const ReturnStmt&) = default;
};

struct BreakStmt {
  friend bool operator==(const BreakStmt&, const BreakStmt&) = default;
};

struct ContinueStmt {
  friend bool operator==(const ContinueStmt&, const ContinueStmt&) = default;
};

struct EmptyStmt {
  friend bool operator==(const EmptyStmt&, const EmptyStmt&) = default;
};

// A preprocessor line inside a function body, kept verbatim (e.g. a
// hand-written `#pragma omp barrier`).
struct PpStmt {
  std::string text;
  friend bool operator==(const PpStmt&, const PpStmt&) = default;
};

// A preomp directive that does not precede a for statement. Only produced by
// lenient parsing so that validate() can report it.
struct StrayDirective {
  Directive directive;
  Box<Stmt> target;
  friend bool operator==(const StrayDirective&, const StrayDirective&) = default;
};

// A directive loop after transformation. `lowered` is the plain C that gets
// printed; the remaining fields feed the emitted manifest.
struct VersionedLoop {
  int loop_id = 0;
  int nest_id = 0;
  int depth = 0;
  GenerationMode mode = GenerationMode::kDuplicate;
  SourceSpan origin;
  Box<Stmt> lowered;
  friend bool operator==(const VersionedLoop&, const VersionedLoop&) = default;
};

struct Stmt {
  std::variant<Block, ExprStmt, DeclStmt, ForStmt, IfStmt, WhileStmt,
               ReturnStmt, BreakStmt, ContinueStmt, EmptyStmt, PpStmt,
               StrayDirective, VersionedLoop>
      node;
  SourceSpan span;

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct Param {
  TypeSpec type;
  int pointers = 0;
  std::string name;  // empty when unnamed
  std::vector<std::optional<Expr>> dims;
  friend bool operator==(const Param&, const Param&) = default;
};

struct Function {
  TypeSpec return_type;
  std::string name;
  std::vector<Param> params;
  // `f(void)` rather than `f()`.
  bool void_params = false;
  // Absent for prototypes.
  std::optional<Block> body;
  friend bool operator==(const Function&, const Function&) = default;
};

// A preprocessor line at file scope (#include, #define, ...), verbatim.
struct PpLine {
  std::string text;
  friend bool operator==(const PpLine&, const PpLine&) = default;
};

struct TopLevel {
  std::variant<PpLine, Function, Decl> node;
  SourceSpan span;
  friend bool operator==(const TopLevel&, const TopLevel&) = default;
};

struct TranslationUnit {
  std::vector<TopLevel> items;
  friend bool operator==(const TranslationUnit&,
                         const TranslationUnit&) = default;
};

using SyntaxTree = TranslationUnit;

Stmt make_stmt(Expr e);
Stmt make_block(std::vector<Stmt> items);

// Number of directive-annotated for loops (including stray directives).
int count_directives(const SyntaxTree& tree);

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_AST_H_
