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

#ifndef PREOMP_TRANSFORMER_EMIT_H_
#define PREOMP_TRANSFORMER_EMIT_H_

#include <optional>
#include <string>
#include <vector>

#include "preomp/frontend/ast.h"
#include "preomp/generation_mode.h"

namespace preomp::transformer {

struct ManifestEntry {
  int loop_id = 0;
  int nest_id = 0;
  int depth = 0;
  frontend::SourceSpan span;
  // nullopt for directive loops that were not transformed.
  std::optional<GenerationMode> mode;
};

struct EmittedUnit {
  std::string text;
  // One entry per directive site, ordered by loop_id.
  std::vector<ManifestEntry> manifest;
};

// Prints the tree as C. When the tree holds transformed loops the text starts
// with `#include "preomp_rt.h"` (unless already present).
EmittedUnit emit_c(const frontend::SyntaxTree& tree);

// Tab-separated manifest with a header line:
//   loop_id  nest_id  depth  line:col  mode
std::string format_manifest(const std::vector<ManifestEntry>& manifest);

}  // namespace preomp::transformer

#endif  // PREOMP_TRANSFORMER_EMIT_H_
