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

#ifndef PREOMP_TRANSFORMER_OMP_PRAGMA_H_
#define PREOMP_TRANSFORMER_OMP_PRAGMA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "preomp/frontend/ast.h"

namespace preomp::transformer {

// The subset of `#pragma omp parallel for` the transformer emits.
struct OmpParallelFor {
  std::vector<frontend::DataClause> clauses;
  std::optional<frontend::Expr> if_clause;
};

std::string print_omp_parallel_for(const OmpParallelFor& pragma);

// nullopt for anything that is not a `#pragma omp parallel for` carrying only
// private/shared/if clauses.
std::optional<OmpParallelFor> parse_omp_parallel_for(std::string_view pp_line);

}  // namespace preomp::transformer

#endif  // PREOMP_TRANSFORMER_OMP_PRAGMA_H_
