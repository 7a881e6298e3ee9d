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

#include "preomp/costsim/scenario.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <yaml-cpp/yaml.h>

namespace preomp::costsim {

namespace {

constexpr std::array kTopKeys = {"repeats", "levels", "overheads",
                                 "perturbation"};
constexpr std::array kLevelKeys = {"name",     "count",     "count_table",
                                   "table_index", "pre_work", "body_work",
                                   "parallelisable", "threshold"};
constexpr std::array kOverheadKeys = {"region_create", "decision_call",
                                      "instrument_call", "ompif_serial_region"};

[[noreturn]] void fail(std::string_view path, std::string_view what) {
  throw ScenarioError(fmt::format("{}: {}", path, what));
}

template <std::size_t N>
bool known(const std::array<const char*, N>& keys, std::string_view key) {
  return std::any_of(keys.begin(), keys.end(),
                     [&](const char* k) { return key == k; });
}

template <std::size_t N>
void reject_unknown(const YAML::Node& map, const std::array<const char*, N>& keys,
                    std::string_view path) {
  if (!map.IsMap()) fail(path, "expected a mapping");
  for (const auto& kv : map) {
    auto key = kv.first.as<std::string>();
    if (!known(keys, key)) {
      fail(path.empty() ? key : fmt::format("{}.{}", path, key), "unknown key");
    }
  }
}

std::string join_path(std::string_view base, std::string_view key) {
  return base.empty() ? std::string(key) : fmt::format("{}.{}", base, key);
}

template <typename T>
T read(const YAML::Node& node, std::string_view path, std::string_view what) {
  if (!node.IsScalar()) fail(path, fmt::format("expected {}", what));
  try {
    return node.as<T>();
  } catch (const YAML::BadConversion&) {
    fail(path, fmt::format("expected {}, got '{}'", what, node.Scalar()));
  }
}

template <typename T>
T read_or(const YAML::Node& map, std::string_view base, const char* key,
          T fallback, std::string_view what) {
  const YAML::Node node = map[key];
  if (!node) return fallback;
  return read<T>(node, join_path(base, key), what);
}

YAML::Node parse_yaml(std::string_view text, std::string_view what) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    fail(what, e.what());
  }
}

void apply_override(YAML::Node root, std::string_view assignment) {
  std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    fail(assignment, "override must look like key.path=value");
  }
  std::string_view key_path = assignment.substr(0, eq);
  std::string_view value_text = assignment.substr(eq + 1);
  std::vector<std::string> parts;
  for (std::size_t pos = 0;;) {
    std::size_t dot = key_path.find('.', pos);
    parts.emplace_back(key_path.substr(pos, dot - pos));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  YAML::Node value = parse_yaml(value_text, key_path);
  if (!value || value.IsNull()) fail(key_path, "override value is empty");

  const std::string& top = parts[0];
  if (!known(kTopKeys, top)) fail(key_path, "unknown key");
  if (top == "levels") {
    if (parts.size() != 3) fail(key_path, "expected levels.<index>.<key>");
    std::size_t index = 0;
    auto [end, ec] = std::from_chars(parts[1].data(),
                                     parts[1].data() + parts[1].size(), index);
    YAML::Node levels = root["levels"];
    if (ec != std::errc() || end != parts[1].data() + parts[1].size() ||
        !levels.IsSequence() || index >= levels.size()) {
      fail(key_path, "no such level");
    }
    if (!known(kLevelKeys, parts[2])) fail(key_path, "unknown key");
    YAML::Node level = levels[index];
    if (parts[2] == "count") {
      level.remove("count_table");
      level.remove("table_index");
    }
    if (parts[2] == "count_table") level.remove("count");
    level[parts[2]] = value;
  } else if (top == "overheads") {
    if (parts.size() != 2 || !known(kOverheadKeys, parts[1])) {
      fail(key_path, "unknown key");
    }
    root["overheads"][parts[1]] = value;
  } else {
    if (parts.size() != 1) fail(key_path, "unknown key");
    root[top] = value;
  }
}

SimProgram convert(const YAML::Node& root) {
  if (!root || !root.IsMap()) fail("<root>", "expected a mapping");
  reject_unknown(root, kTopKeys, "");
  SimProgram p;
  p.repeats = read_or<std::int64_t>(root, "", "repeats", 1, "an integer");
  p.perturbation = read_or<double>(root, "", "perturbation", 0.0, "a number");

  if (const YAML::Node o = root["overheads"]) {
    reject_unknown(o, kOverheadKeys, "overheads");
    OverheadModel& m = p.overheads;
    m.region_create =
        read_or<double>(o, "overheads", "region_create", 0.0, "a number");
    m.decision_call =
        read_or<double>(o, "overheads", "decision_call", 0.0, "a number");
    m.instrument_call =
        read_or<double>(o, "overheads", "instrument_call", 0.0, "a number");
    m.ompif_serial_region =
        read_or<bool>(o, "overheads", "ompif_serial_region", true, "a boolean");
  }

  const YAML::Node levels = root["levels"];
  if (!levels || !levels.IsSequence()) fail("levels", "expected a list");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const YAML::Node l = levels[k];
    std::string path = fmt::format("levels.{}", k);
    reject_unknown(l, kLevelKeys, path);
    LoopLevel level;
    if (!l["name"]) fail(path + ".name", "missing");
    level.name = read<std::string>(l["name"], path + ".name", "a string");
    level.pre_work = read_or<double>(l, path, "pre_work", 0.0, "a number");
    level.body_work = read_or<double>(l, path, "body_work", 0.0, "a number");
    level.parallelisable =
        read_or<bool>(l, path, "parallelisable", true, "a boolean");
    level.threshold = read_or<double>(l, path, "threshold", 1.0, "a number");

    const bool has_count = static_cast<bool>(l["count"]);
    const bool has_table = static_cast<bool>(l["count_table"]);
    if (has_count == has_table) {
      fail(path, "exactly one of count and count_table is required");
    }
    if (has_count) {
      level.count = read<std::int64_t>(l["count"], path + ".count", "an integer");
      if (l["table_index"]) {
        fail(path + ".table_index", "only allowed with count_table");
      }
    } else {
      const YAML::Node t = l["count_table"];
      if (!t.IsSequence()) fail(path + ".count_table", "expected a list");
      CountTable table;
      for (std::size_t i = 0; i < t.size(); ++i) {
        table.values.push_back(read<std::int64_t>(
            t[i], fmt::format("{}.count_table.{}", path, i), "an integer"));
      }
      table.index_level = k == 0 ? kRepeatIndex : 0;
      if (const YAML::Node idx = l["table_index"]) {
        auto name = read<std::string>(idx, path + ".table_index", "a level name");
        if (name == "repeat") {
          table.index_level = kRepeatIndex;
        } else {
          table.index_level = find_level(p, name);
          if (table.index_level < 0) {
            fail(path + ".table_index",
                 fmt::format("'{}' is not an enclosing level", name));
          }
        }
      }
      level.count = std::move(table);
    }
    p.levels.push_back(std::move(level));
  }
  validate_program(p);
  return p;
}

std::string number(double v) { return fmt::format("{}", v); }

}  // namespace

int find_level(const SimProgram& program, std::string_view name) {
  for (std::size_t k = 0; k < program.levels.size(); ++k) {
    if (program.levels[k].name == name) return static_cast<int>(k);
  }
  return -1;
}

SimProgram parse_scenario(std::string_view yaml,
                          std::span<const std::string> overrides) {
  YAML::Node root = parse_yaml(yaml, "<scenario>");
  for (const std::string& o : overrides) apply_override(root, o);
  return convert(root);
}

SimProgram load_scenario(const std::filesystem::path& path,
                         std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError(fmt::format("{}: cannot open scenario", path.string()));
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

std::string format_scenario(const SimProgram& p) {
  std::string out = fmt::format("repeats: {}\nlevels:\n", p.repeats);
  for (const LoopLevel& l : p.levels) {
    out += fmt::format("  - name: {}\n", l.name);
    if (const auto* n = std::get_if<std::int64_t>(&l.count)) {
      out += fmt::format("    count: {}\n", *n);
    } else {
      const CountTable& t = std::get<CountTable>(l.count);
      out += fmt::format("    count_table: [{}]\n", fmt::join(t.values, ", "));
      out += fmt::format("    table_index: {}\n",
                         t.index_level == kRepeatIndex
                             ? std::string("repeat")
                             : p.levels.at(t.index_level).name);
    }
    out += fmt::format("    pre_work: {}\n", number(l.pre_work));
    out += fmt::format("    body_work: {}\n", number(l.body_work));
    out += fmt::format("    parallelisable: {}\n", l.parallelisable);
    out += fmt::format("    threshold: {}\n", number(l.threshold));
  }
  const OverheadModel& o = p.overheads;
  out += fmt::format(
      "overheads:\n  region_create: {}\n  decision_call: {}\n"
      "  instrument_call: {}\n  ompif_serial_region: {}\n",
      number(o.region_create), number(o.decision_call),
      number(o.instrument_call), o.ompif_serial_region);
  out += fmt::format("perturbation: {}\n", number(p.perturbation));
  return out;
}

std::string format_report_yaml(const SimProgram& program,
                               std::span<const SimRun> runs, bool with_trace) {
  std::string out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const SimRun& run = runs[i];
    const SimReport& r = run.report;
    if (i > 0) out += "---\n";
    out += fmt::format("threads: {}\n", run.threads);
    out += fmt::format("decider: {}\n", describe(run.policy, program));
    out += fmt::format("mode: {}\n", to_string(run.mode));
    out += fmt::format("total_time: {}\n", number(r.total_time));
    std::vector<std::string> repeats;
    for (double t : r.repeat_times) repeats.push_back(number(t));
    out += fmt::format("repeat_times: [{}]\n", fmt::join(repeats, ", "));
    out += "per_level_parallel_counts:\n";
    for (const LoopLevel& l : program.levels) {
      out += fmt::format("  {}: {}\n", l.name,
                         r.per_level_parallel_counts.at(l.name));
    }
    out += fmt::format("bookkeeping_ops: {}\n", r.bookkeeping_ops);
    out += fmt::format("decisions: {}\n", r.trace.size());
    if (with_trace) {
      out += "trace:\n";
      for (const auto& rec : r.trace) {
        out += fmt::format("  - \"{}\"\n", decider::format_trace_record(rec));
      }
    }
  }
  return out;
}

std::string format_report_csv(const SimProgram& program,
                              std::span<const SimRun> runs) {
  std::string out = "threads,decider,mode,total_time,bookkeeping_ops";
  for (const LoopLevel& l : program.levels) {
    out += fmt::format(",{}_parallel", l.name);
  }
  out += "\n";
  for (const SimRun& run : runs) {
    out += fmt::format("{},{},{},{},{}", run.threads,
                       describe(run.policy, program), to_string(run.mode),
                       number(run.report.total_time),
                       run.report.bookkeeping_ops);
    for (const LoopLevel& l : program.levels) {
      out += fmt::format(",{}", run.report.per_level_parallel_counts.at(l.name));
    }
    out += "\n";
  }
  return out;
}

}  // namespace preomp::costsim
