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

#ifndef PREOMP_FRONTEND_LEXER_H_
#define PREOMP_FRONTEND_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "preomp/frontend/ast.h"

namespace preomp::frontend {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kInt,
  kFloat,
  kString,
  kChar,
  kPunct,
  // A whole preprocessor line (continuations joined), starting at '#'.
  kPpLine,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceSpan span;
};

// Splits `source` into tokens. Comments are dropped. Always ends with a kEnd
// token. Throws ParseError on malformed input (unterminated comment, string,
// or an unknown character).
std::vector<Token> tokenize(std::string_view source);

bool is_type_keyword(std::string_view word);

// Token spellings with preprocessor lines whitespace-normalised. Two sources
// are token-equivalent when these sequences match.
std::vector<std::string> token_spellings(std::string_view source);

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_LEXER_H_
