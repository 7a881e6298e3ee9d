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

#include "preomp/cli/commands.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "preomp/costsim/model.h"
#include "preomp/costsim/scenario.h"
#include "preomp/costsim/simulate.h"
#include "preomp/costsim/sweep.h"
#include "preomp/frontend/descriptors.h"
#include "preomp/frontend/diagnostics.h"
#include "preomp/frontend/parser.h"
#include "preomp/frontend/validate.h"
#include "preomp/transformer/emit.h"
#include "preomp/transformer/transform.h"

namespace preomp::cli {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& text,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    fmt::print(err, "error: cannot write {}\n", path);
    return false;
  }
  return true;
}

}  // namespace

int run_transpile(const TranspileConfig& config, std::ostream& out,
                  std::ostream& err) {
  auto source = read_file(config.input_path);
  if (!source) {
    fmt::print(err, "error: cannot read {}\n", config.input_path);
    return 1;
  }
  frontend::SyntaxTree tree;
  try {
    tree = frontend::parse_unit(*source, {.strict = false});
  } catch (const frontend::ParseError& e) {
    fmt::print(err, "{}:{}\n", config.input_path, e.what());
    return 1;
  }
  auto diagnostics = frontend::validate(tree);
  for (const auto& d : diagnostics) {
    fmt::print(err, "{}:{}\n", config.input_path, frontend::format_diagnostic(d));
  }
  if (frontend::has_errors(diagnostics)) return 1;

  auto descriptors = frontend::extract_descriptors(tree);
  auto lowered = transformer::transform(tree, descriptors.loops, config.mode);
  auto emitted = transformer::emit_c(lowered);
  if (config.output_path.empty()) {
    out << emitted.text;
    if (!config.manifest_path.empty()) {
      return write_file(config.manifest_path,
                        transformer::format_manifest(emitted.manifest), err)
                 ? 0
                 : 1;
    }
    return 0;
  }
  std::string manifest_path = config.manifest_path.empty()
                                  ? config.output_path + ".manifest"
                                  : config.manifest_path;
  bool ok = write_file(config.output_path, emitted.text, err) &&
            write_file(manifest_path,
                       transformer::format_manifest(emitted.manifest), err);
  return ok ? 0 : 1;
}

int run_simulate(const SimulateConfig& config, std::ostream& out,
                 std::ostream& err) {
  try {
    costsim::SimProgram program =
        costsim::load_scenario(config.scenario_path, config.overrides);
    std::vector<costsim::Policy> policies;
    if (!config.static_level.empty()) {
      int level = costsim::find_level(program, config.static_level);
      if (level < 0) {
        fmt::print(err, "error: --static: no level named '{}'\n",
                   config.static_level);
        return 1;
      }
      policies.push_back(costsim::StaticPolicy{level});
    } else {
      for (const std::string& name : config.deciders) {
        auto kind = decider::parse_decider_kind(name);
        if (!kind) {
          fmt::print(err, "error: unknown decider '{}'\n", name);
          return 1;
        }
        policies.push_back(*kind);
      }
    }
    std::vector<costsim::SimRun> runs;
    for (int threads : config.threads) {
      for (const costsim::Policy& policy : policies) {
        runs.push_back({threads, policy, config.mode,
                        costsim::simulate(program, threads, policy, config.mode)});
      }
    }
    std::string text = config.format == "csv"
                           ? costsim::format_report_csv(program, runs)
                           : costsim::format_report_yaml(program, runs, config.trace);
    if (config.output_path.empty()) {
      out << text;
      return 0;
    }
    return write_file(config.output_path, text, err) ? 0 : 1;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
}

int run_model(const ModelConfig& c, std::ostream& out, std::ostream& err) {
  try {
    double threshold = costsim::threshold_outer_work(
        c.inner_iters, c.t_inner, c.outer_threads, c.inner_threads);
    fmt::print(out, "analytic_outer: {}\n",
               costsim::analytic_outer(c.outer_iters, c.inner_iters, c.t_outer,
                                       c.t_inner, c.outer_threads));
    fmt::print(out, "analytic_inner: {}\n",
               costsim::analytic_inner(c.outer_iters, c.inner_iters, c.t_outer,
                                       c.t_inner, c.inner_threads));
    fmt::print(out, "threshold_outer_work: {:.6f}\n", threshold);
    if (c.sweep.empty()) return 0;

    auto grid = costsim::parse_grid(c.sweep);
    auto nest =
        costsim::make_two_level_nest(c.outer_iters, c.inner_iters, 0.0, c.t_inner);
    fmt::print(out, "sweep:\n");
    for (const auto& p :
         costsim::sweep(nest, c.outer_threads, c.inner_threads, grid)) {
      fmt::print(out, "  - [{:.6f}, {}, {}, {}]\n", p.t_outer, p.outer_time,
                 p.inner_time, p.outer_time <= p.inner_time ? "outer" : "inner");
    }
    fmt::print(out, "crossing: {:.6f}\n",
               costsim::sweep_crossing(nest, c.outer_threads, c.inner_threads,
                                       grid));
    return 0;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Source-to-source OpenMP nested-loop transpiler and cost simulator",
               "preomp"};
  app.require_subcommand(1);

  const std::vector<std::string> modes{"duplicate", "ompif"};
  std::string transpile_mode = "duplicate";
  std::string simulate_mode = "duplicate";

  TranspileConfig tc;
  auto* transpile = app.add_subcommand(
      "transpile", "Lower #pragma preomp loops to runtime-decided OpenMP C");
  transpile->add_option("input", tc.input_path, "C source file")
      ->required()
      ->check(CLI::ExistingFile);
  transpile->add_option("-o,--output", tc.output_path,
                        "Output C file (default: stdout); the manifest goes "
                        "next to it as <output>.manifest");
  transpile->add_option("--manifest", tc.manifest_path,
                        "Manifest path (overrides <output>.manifest)");
  transpile->add_option("--mode", transpile_mode, "Code generation mode")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();

  SimulateConfig sc;
  auto* simulate =
      app.add_subcommand("simulate", "Run a loop-nest scenario in virtual time");
  simulate->add_option("scenario", sc.scenario_path, "Scenario YAML file")
      ->required()
      ->check(CLI::ExistingFile);
  simulate
      ->add_option("-t,--threads", sc.threads,
                   "Thread counts, comma separated (env PREOMP_THREADS)")
      ->delimiter(',')
      ->envname("PREOMP_THREADS")
      ->check(CLI::PositiveNumber)
      ->default_str("1");
  simulate
      ->add_option("-d,--decider", sc.deciders,
                   "heuristic, profiling or relaxed_profiling; comma separated")
      ->delimiter(',')
      ->default_str("heuristic");
  simulate->add_option("--static", sc.static_level,
                       "Always parallelise this level, no decision functions");
  simulate->add_option("--mode", simulate_mode, "Code generation mode")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  simulate->add_option("--set", sc.overrides,
                       "Scenario override key.path=value (repeatable)");
  simulate->add_flag("--trace", sc.trace, "Include the decision trace");
  simulate->add_option("--format", sc.format, "Report format")
      ->check(CLI::IsMember({"yaml", "csv"}))
      ->default_str("yaml");
  simulate->add_option("-o,--output", sc.output_path,
                       "Report file (default: stdout)");

  ModelConfig mc;
  auto* model = app.add_subcommand(
      "model", "Closed-form two-level nest times and break-even outer work");
  model->add_option("--outer-iters", mc.outer_iters, "Outer loop iterations")
      ->required()
      ->check(CLI::NonNegativeNumber);
  model->add_option("--inner-iters", mc.inner_iters, "Inner loop iterations")
      ->required()
      ->check(CLI::NonNegativeNumber);
  model->add_option("--t-outer", mc.t_outer, "Work between the loops")
      ->check(CLI::NonNegativeNumber)
      ->default_str("0");
  model->add_option("--t-inner", mc.t_inner, "Work per inner iteration")
      ->required()
      ->check(CLI::NonNegativeNumber);
  model->add_option("--outer-threads", mc.outer_threads,
                    "Threads when parallelising the outer loop")
      ->required()
      ->check(CLI::PositiveNumber);
  model->add_option("--inner-threads", mc.inner_threads,
                    "Threads when parallelising the inner loop")
      ->required()
      ->check(CLI::PositiveNumber);
  model->add_option("--sweep", mc.sweep,
                    "Simulate t_outer over start:stop:step and report the "
                    "crossing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  tc.mode = *parse_generation_mode(transpile_mode);
  sc.mode = *parse_generation_mode(simulate_mode);
  if (*transpile) return run_transpile(tc, out, err);
  if (*simulate) return run_simulate(sc, out, err);
  return run_model(mc, out, err);
}

}  // namespace preomp::cli
