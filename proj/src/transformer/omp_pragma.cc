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

#include "omp_pragma.h"

#include "preomp/frontend/diagnostics.h"
#include "preomp/frontend/lexer.h"
#include "preomp/frontend/parser.h"
#include "preomp/frontend/printer.h"

namespace preomp::transformer {

using frontend::ClauseKind;
using frontend::DataClause;
using frontend::Token;
using frontend::TokenKind;

std::string print_omp_parallel_for(const OmpParallelFor& pragma) {
  std::string out = "#pragma omp parallel for";
  std::string clauses = frontend::print_data_clauses(pragma.clauses);
  if (!clauses.empty()) out += " " + clauses;
  if (pragma.if_clause) {
    out += " if(" + frontend::print_expr(*pragma.if_clause) + ")";
  }
  return out;
}

std::optional<OmpParallelFor> parse_omp_parallel_for(std::string_view pp_line) {
  std::vector<Token> toks;
  try {
    toks = frontend::tokenize(pp_line.substr(pp_line.find('#') + 1));
  } catch (const frontend::ParseError&) {
    return std::nullopt;
  }
  if (toks.size() < 5 || toks[0].text != "pragma" || toks[1].text != "omp" ||
      toks[2].text != "parallel" || toks[3].text != "for") {
    return std::nullopt;
  }
  OmpParallelFor out;
  std::size_t i = 4;
  auto punct = [&](std::string_view p) {
    return i < toks.size() && toks[i].kind == TokenKind::kPunct &&
           toks[i].text == p;
  };
  while (toks[i].kind != TokenKind::kEnd) {
    std::string name = toks[i++].text;
    if (!punct("(")) return std::nullopt;
    ++i;
    if (name == "private" || name == "shared") {
      DataClause clause;
      clause.kind =
          name == "private" ? ClauseKind::kPrivate : ClauseKind::kShared;
      while (true) {
        if (toks[i].kind != TokenKind::kIdentifier) return std::nullopt;
        clause.names.push_back(toks[i++].text);
        if (punct(",")) {
          ++i;
          continue;
        }
        break;
      }
      if (!punct(")")) return std::nullopt;
      ++i;
      out.clauses.push_back(std::move(clause));
    } else if (name == "if" && !out.if_clause) {
      std::string text;
      int depth = 1;
      while (toks[i].kind != TokenKind::kEnd) {
        if (punct("(")) ++depth;
        if (punct(")") && --depth == 0) break;
        text += toks[i++].text + " ";
      }
      if (!punct(")")) return std::nullopt;
      ++i;
      try {
        out.if_clause = frontend::parse_expression(text);
      } catch (const frontend::ParseError&) {
        return std::nullopt;
      }
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace preomp::transformer
