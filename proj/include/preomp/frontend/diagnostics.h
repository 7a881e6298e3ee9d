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

#ifndef PREOMP_FRONTEND_DIAGNOSTICS_H_
#define PREOMP_FRONTEND_DIAGNOSTICS_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "preomp/frontend/ast.h"

namespace preomp::frontend {

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kError;
  SourceSpan span;
  std::string message;
};

// "<line>:<col>: error: <message>"
std::string format_diagnostic(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// Thrown by the lexer and parser. what() includes the position.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message);

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

}  // namespace preomp::frontend

#endif  // PREOMP_FRONTEND_DIAGNOSTICS_H_
