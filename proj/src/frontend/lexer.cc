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

#include "preomp/frontend/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

#include <fmt/format.h>

#include "preomp/frontend/diagnostics.h"

namespace preomp::frontend {
namespace {

constexpr std::array<std::string_view, 11> kTypeKeywords = {
    "int",      "long",   "double", "float", "char",  "void",
    "unsigned", "signed", "short",  "const", "static"};

constexpr std::array<std::string_view, 7> kStatementKeywords = {
    "for", "if", "else", "while", "return", "break", "continue"};

// Longest first so that maximal munch works with a linear scan.
constexpr std::array<std::string_view, 32> kPunctuators = {
    "<<=", ">>=", "->", "++", "--", "+=", "-=", "*=", "/=", "%=", "<=", "==",
    ">=",  "!=",  "&&", "||", "<<", ">>", "+",  "-",  "*",  "/",  "%",
    "<",   ">",   "=",  "!",  "(",  ")",  "{",  "}",  ";"};

constexpr std::string_view kSinglePunct = ",[]?:&|^~.";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool line_start = true;
    while (true) {
      skip_space_and_comments(line_start);
      if (at_end()) break;
      SourceSpan span{line_, col_};
      char c = peek();
      if (c == '#' && line_start) {
        out.push_back({TokenKind::kPpLine, read_pp_line(), span});
        line_start = true;
        continue;
      }
      line_start = false;
      if (is_ident_start(c)) {
        std::string word = read_while(is_ident_char);
        TokenKind kind = is_keyword(word) ? TokenKind::kKeyword
                                          : TokenKind::kIdentifier;
        out.push_back({kind, std::move(word), span});
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        out.push_back(read_number(span));
      } else if (c == '"' || c == '\'') {
        out.push_back(read_quoted(span));
      } else {
        out.push_back({TokenKind::kPunct, read_punct(span), span});
      }
    }
    out.push_back({TokenKind::kEnd, "", {line_, col_}});
    return out;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  static bool is_keyword(std::string_view w) {
    return is_type_keyword(w) ||
           std::find(kStatementKeywords.begin(), kStatementKeywords.end(), w) !=
               kStatementKeywords.end();
  }

  void skip_space_and_comments(bool& line_start) {
    while (!at_end()) {
      char c = peek();
      if (c == '\n') {
        advance();
        line_start = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start{line_, col_};
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) throw ParseError(start, "unterminated comment");
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  template <typename Pred>
  std::string read_while(Pred pred) {
    std::string s;
    while (!at_end() && pred(peek())) s.push_back(advance());
    return s;
  }

  std::string read_pp_line() {
    std::string s;
    while (!at_end() && peek() != '\n') {
      if (peek() == '\\' && peek(1) == '\n') {
        advance();
        advance();
        s.push_back(' ');
        continue;
      }
      s.push_back(advance());
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.pop_back();
    }
    return s;
  }

  Token read_number(SourceSpan span) {
    std::string s;
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      s.push_back(advance());
      s.push_back(advance());
      s += read_while(
          [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
    } else {
      s += read_while(is_digit);
      if (peek() == '.') {
        is_float = true;
        s.push_back(advance());
        s += read_while(is_digit);
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t sign = (peek(1) == '+' || peek(1) == '-') ? 1 : 0;
        if (is_digit(peek(1 + sign))) {
          is_float = true;
          s.push_back(advance());
          if (sign) s.push_back(advance());
          s += read_while(is_digit);
        }
      }
    }
    s += read_while([](char c) {
      return c == 'u' || c == 'U' || c == 'l' || c == 'L' || c == 'f' ||
             c == 'F';
    });
    if (is_ident_char(peek())) {
      throw ParseError(span, fmt::format("malformed number '{}{}'", s, peek()));
    }
    return {is_float ? TokenKind::kFloat : TokenKind::kInt, std::move(s),
            span};
  }

  Token read_quoted(SourceSpan span) {
    char quote = advance();
    std::string s(1, quote);
    while (true) {
      if (at_end() || peek() == '\n') {
        throw ParseError(span, quote == '"' ? "unterminated string literal"
                                            : "unterminated character literal");
      }
      char c = advance();
      s.push_back(c);
      if (c == '\\') {
        s.push_back(advance());
      } else if (c == quote) {
        break;
      }
    }
    return {quote == '"' ? TokenKind::kString : TokenKind::kChar, std::move(s),
            span};
  }

  std::string read_punct(SourceSpan span) {
    for (std::string_view p : kPunctuators) {
      if (src_.substr(pos_, p.size()) == p) {
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        return std::string(p);
      }
    }
    if (kSinglePunct.find(peek()) != std::string_view::npos) {
      return std::string(1, advance());
    }
    throw ParseError(span, fmt::format("unexpected character '{}'", peek()));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_type_keyword(std::string_view word) {
  return std::find(kTypeKeywords.begin(), kTypeKeywords.end(), word) !=
         kTypeKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

std::vector<std::string> token_spellings(std::string_view source) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(source)) {
    if (t.kind == TokenKind::kEnd) break;
    if (t.kind != TokenKind::kPpLine) {
      out.push_back(t.text);
      continue;
    }
    // Preprocessor lines compare by their inner tokens when they lex cleanly
    // (e.g. `private( j )` vs `private(j)`), else by collapsed whitespace.
    out.emplace_back("#");
    try {
      for (const Token& inner : tokenize(std::string_view(t.text).substr(1))) {
        if (inner.kind != TokenKind::kEnd) out.push_back(inner.text);
      }
    } catch (const ParseError&) {
      std::string collapsed;
      bool space = false;
      for (char c : t.text.substr(1)) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          space = true;
          continue;
        }
        if (space && !collapsed.empty()) collapsed.push_back(' ');
        space = false;
        collapsed.push_back(c);
      }
      out.push_back(collapsed);
    }
  }
  return out;
}

}  // namespace preomp::frontend
