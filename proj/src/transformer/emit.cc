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

#include "preomp/transformer/emit.h"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "preomp/frontend/printer.h"
#include "preomp/frontend/walk.h"
#include "preomp/transformer/transform.h"

namespace preomp::transformer {

using namespace frontend;

namespace {

class ManifestBuilder {
 public:
  std::vector<ManifestEntry> run(const SyntaxTree& tree) {
    for (const auto& item : tree.items) {
      if (const auto* f = std::get_if<Function>(&item.node); f && f->body) {
        for (const Stmt& s : f->body->items) visit(s, 0);
      }
    }
    std::vector<ManifestEntry> out;
    for (auto& [id, entry] : entries_) out.push_back(entry);
    return out;
  }

  bool transformed() const { return transformed_; }

 private:
  void add(ManifestEntry e) { entries_.try_emplace(e.loop_id, e); }

  void visit(const Stmt& s, int depth) {
    std::visit(
        Overloaded{
            [&](const Block& b) {
              for (const Stmt& item : b.items) visit(item, depth);
            },
            [&](const ForStmt& f) {
              if (f.directive) {
                if (depth == 0) nest_ = next_nest_++;
                add({f.directive->site, nest_, depth, s.span, std::nullopt});
                visit(*f.body, depth + 1);
              } else {
                visit(*f.body, depth);
              }
            },
            [&](const IfStmt& i) {
              visit(*i.then_branch, depth);
              if (i.else_branch) visit(**i.else_branch, depth);
            },
            [&](const WhileStmt& w) { visit(*w.body, depth); },
            [&](const StrayDirective& d) { visit(*d.target, depth); },
            [&](const VersionedLoop& v) {
              transformed_ = true;
              add({v.loop_id, v.nest_id, v.depth, v.origin, v.mode});
              visit(*v.lowered, depth + 1);
            },
            [](const auto&) {},
        },
        s.node);
  }

  std::map<int, ManifestEntry> entries_;
  int next_nest_ = 0;
  int nest_ = 0;
  bool transformed_ = false;
};

}  // namespace

EmittedUnit emit_c(const SyntaxTree& tree) {
  ManifestBuilder builder;
  EmittedUnit out;
  out.manifest = builder.run(tree);
  std::string include = fmt::format("#include \"{}\"", kRuntimeHeader);
  bool has_include =
      std::any_of(tree.items.begin(), tree.items.end(), [&](const TopLevel& t) {
        const auto* pp = std::get_if<PpLine>(&t.node);
        return pp && pp->text == include;
      });
  if (builder.transformed() && !has_include) {
    out.text = include + "\n";
    if (!tree.items.empty()) out.text += "\n";
  }
  out.text += print_unit(tree);
  return out;
}

std::string format_manifest(const std::vector<ManifestEntry>& manifest) {
  std::string out = "# loop_id\tnest_id\tdepth\tspan\tmode\n";
  for (const ManifestEntry& e : manifest) {
    out += fmt::format("{}\t{}\t{}\t{}\t{}\n", e.loop_id, e.nest_id, e.depth,
                       to_string(e.span),
                       e.mode ? to_string(*e.mode) : std::string_view("none"));
  }
  return out;
}

}  // namespace preomp::transformer
