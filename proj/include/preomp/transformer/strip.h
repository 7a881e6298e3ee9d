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

#ifndef PREOMP_TRANSFORMER_STRIP_H_
#define PREOMP_TRANSFORMER_STRIP_H_

#include <stdexcept>

#include "preomp/frontend/ast.h"

namespace preomp::transformer {

enum class BranchSelection { kSerial, kParallel };

class InstrumentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inverse of transform(). Recognises the lowered shapes of both generation
// modes, either as VersionedLoop nodes or as plain statements re-parsed from
// emitted text, keeps the selected branch of each decision, deletes the
// runtime calls, the generated OpenMP pragma and the runtime #include, and
// rebuilds the preomp directive from the decision call and pragma clauses.
// Throws InstrumentationError on runtime calls outside a recognised shape.
frontend::SyntaxTree strip_instrumentation(
    const frontend::SyntaxTree& emitted,
    BranchSelection selection = BranchSelection::kSerial);

}  // namespace preomp::transformer

#endif  // PREOMP_TRANSFORMER_STRIP_H_
