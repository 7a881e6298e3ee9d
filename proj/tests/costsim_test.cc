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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "preomp/costsim/model.h"
#include "preomp/costsim/program.h"
#include "preomp/costsim/scenario.h"
#include "preomp/costsim/simulate.h"
#include "preomp/costsim/sweep.h"
#include "test_util.h"

namespace preomp::costsim {
namespace {

using decider::Decision;
using decider::DeciderKind;
using ::preomp::testing::scenario_dir;

constexpr DeciderKind kKinds[] = {DeciderKind::kHeuristic, DeciderKind::kProfiling,
                                  DeciderKind::kRelaxedProfiling};
constexpr GenerationMode kModes[] = {GenerationMode::kDuplicate, GenerationMode::kOmpIf};

bool near(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// ---------------------------------------------------------------------------
// Reference model, written independently of the simulator: iterations are
// dealt to threads one by one under OpenMP's static block rule, and each
// thread's time is summed explicitly.

// Owner of iteration i when n iterations are split over `team` threads in
// contiguous blocks, the first n % team threads taking one extra.
std::int64_t static_owner(std::int64_t i, std::int64_t n, std::int64_t team) {
  std::int64_t big = n / team + 1;
  std::int64_t rem = n % team;
  if (i < rem * big) return i / big;
  return rem + (i - rem * big) / (big - 1);
}

struct RefResult {
  double time = 0;
  std::map<int, std::int64_t> parallel;
  std::int64_t decisions = 0;
  std::int64_t bookkeeping = 0;
};

// Heuristic decider or a static level; duplicate or ompif accounting.
class Reference {
 public:
  Reference(const SimProgram& p, int threads, std::optional<int> static_level,
            GenerationMode mode)
      : p_(p), threads_(threads), static_(static_level), mode_(mode) {}

  RefResult run() {
    idx_.assign(p_.levels.size(), 0);
    for (std::int64_t r = 0; r < p_.repeats; ++r) {
      repeat_ = r;
      out_.time += level_time(0, false);
    }
    return out_;
  }

 private:
  double level_time(int k, bool outer_parallel) {
    const LoopLevel& l = p_.levels[k];
    std::int64_t n = iteration_count(p_, k, idx_, repeat_);
    bool decided = !static_ && l.parallelisable;
    bool parallel;
    double over = 0;
    if (decided) {
      ++out_.decisions;
      out_.bookkeeping += 2;
      over += p_.overheads.decision_call + 2 * p_.overheads.instrument_call;
      parallel = !outer_parallel && n > 0 &&
                 static_cast<double>(n) / threads_ >= l.threshold;
    } else {
      parallel = static_ == k;
    }
    if (parallel) {
      ++out_.parallel[k];
      if (threads_ > 1) over += p_.overheads.region_create;
    } else if (decided && mode_ == GenerationMode::kOmpIf &&
               p_.overheads.ompif_serial_region) {
      over += p_.overheads.region_create;
    }
    std::int64_t team = parallel ? threads_ : 1;
    std::vector<double> per_thread(team, 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
      double t;
      if (k + 1 == static_cast<int>(p_.levels.size())) {
        t = l.body_work;
      } else {
        idx_[k] = i;
        t = l.pre_work + level_time(k + 1, outer_parallel || parallel);
      }
      per_thread[static_owner(i, n, team)] += t;
    }
    return over + *std::max_element(per_thread.begin(), per_thread.end());
  }

  const SimProgram& p_;
  int threads_;
  std::optional<int> static_;
  GenerationMode mode_;
  std::vector<std::int64_t> idx_;
  std::int64_t repeat_ = 0;
  RefResult out_;
};

TEST(ReferenceTest, StaticOwnerIsContiguousAndBalanced) {
  for (std::int64_t n = 1; n < 40; ++n) {
    for (std::int64_t team = 1; team < 12; ++team) {
      std::vector<std::int64_t> sizes(team, 0);
      std::int64_t prev = 0;
      for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t o = static_owner(i, n, team);
        ASSERT_GE(o, prev);
        ASSERT_LT(o, team);
        prev = o;
        ++sizes[o];
      }
      auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
      EXPECT_LE(*hi - *lo, 1);
    }
  }
}

// Random nests: 1-4 levels, constant or table-driven counts, random work,
// overheads and thresholds. Without tables every iteration of a level costs
// the same.
SimProgram random_program(std::mt19937& rng, bool overheads, bool tables = true) {
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  SimProgram p;
  p.repeats = pick(1, 3);
  int depth = pick(1, 4);
  for (int k = 0; k < depth; ++k) {
    LoopLevel l;
    l.name = "l" + std::to_string(k);
    if (tables && k > 0 && pick(0, 2) == 0) {
      CountTable t;
      t.index_level = pick(-1, k - 1);
      std::int64_t need = t.index_level == kRepeatIndex
                              ? p.repeats
                              : max_iteration_count(p, t.index_level);
      for (std::int64_t i = 0; i < std::max<std::int64_t>(need, 1); ++i) t.values.push_back(pick(0, 9));
      l.count = t;
    } else {
      l.count = std::int64_t{pick(depth > 3 ? 1 : 0, 10)};
    }
    if (k + 1 < depth) {
      l.pre_work = pick(0, 1) ? uni(0, 0.5) : 0.0;
    } else {
      l.body_work = uni(0.001, 1.0);
    }
    l.parallelisable = pick(0, 4) > 0;
    l.threshold = pick(0, 1) ? 1.0 : uni(0.2, 3.0);
    p.levels.push_back(l);
  }
  if (overheads) {
    p.overheads.region_create = uni(0.0001, 0.5);
    p.overheads.decision_call = uni(0, 0.01);
    p.overheads.instrument_call = uni(0, 0.01);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Analytic model

// Brute-force two-level times: enumerate chunks per thread.
double brute_outer(std::int64_t o, std::int64_t i, double to, double ti, int threads) {
  std::vector<double> t(threads, 0.0);
  for (std::int64_t k = 0; k < o; ++k) t[static_owner(k, o, threads)] += to + i * ti;
  return *std::max_element(t.begin(), t.end());
}

double brute_inner(std::int64_t o, std::int64_t i, double to, double ti, int threads) {
  double total = 0;
  for (std::int64_t k = 0; k < o; ++k) {
    std::vector<double> t(threads, 0.0);
    for (std::int64_t j = 0; j < i; ++j) t[static_owner(j, i, threads)] += ti;
    total += to + *std::max_element(t.begin(), t.end());
  }
  return total;
}

TEST(AnalyticTest, OuterExamples) {
  EXPECT_DOUBLE_EQ(analytic_outer(8, 16, 0, 1.0, 8), 16.0);
  EXPECT_DOUBLE_EQ(analytic_outer(8, 16, 0, 1.0, 6), 32.0);
  EXPECT_DOUBLE_EQ(analytic_outer(4, 10, 0.5, 0.1, 2), 3.0);
  EXPECT_DOUBLE_EQ(brute_outer(4, 10, 0.5, 0.1, 2), 3.0);
}

TEST(AnalyticTest, InnerExamples) {
  EXPECT_DOUBLE_EQ(analytic_inner(8, 16, 0, 1.0, 6), 24.0);
  EXPECT_DOUBLE_EQ(analytic_inner(8, 16, 0, 1.0, 16), 8.0);
  EXPECT_NEAR(analytic_inner(3, 7, 0.2, 0.1, 4), 1.2, 1e-12);
  EXPECT_NEAR(brute_inner(3, 7, 0.2, 0.1, 4), 1.2, 1e-12);
}

TEST(AnalyticTest, MatchesBruteForceChunks) {
  std::mt19937 rng(4);
  for (int n = 0; n < 500; ++n) {
    std::int64_t o = std::uniform_int_distribution<int>(1, 40)(rng);
    std::int64_t i = std::uniform_int_distribution<int>(1, 40)(rng);
    double to = std::uniform_real_distribution<double>(0, 2)(rng);
    double ti = std::uniform_real_distribution<double>(0, 2)(rng);
    int t = std::uniform_int_distribution<int>(1, 20)(rng);
    EXPECT_TRUE(near(analytic_outer(o, i, to, ti, t), brute_outer(o, i, to, ti, t), 1e-9));
    EXPECT_TRUE(near(analytic_inner(o, i, to, ti, t), brute_inner(o, i, to, ti, t), 1e-9));
  }
}

TEST(AnalyticTest, RejectsBadShapes) {
  EXPECT_THROW(analytic_outer(8, 16, 0, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(analytic_inner(8, 16, -1.0, 1.0, 2), std::invalid_argument);
  EXPECT_THROW(analytic_outer(8, -1, 0.0, 1.0, 2), std::invalid_argument);
}

TEST(ThresholdTest, Examples) {
  EXPECT_NEAR(threshold_outer_work(16, 0.0409, 8, 16), 0.0468, 0.0005);
  double expected = 16 * 0.0409 * (1.0 / 8 - 1.0 / 16) / (1 - 1.0 / 8);
  EXPECT_NEAR(threshold_outer_work(16, 0.0409, 8, 16), expected, 1e-15);
  EXPECT_EQ(threshold_outer_work(16, 0.7, 6, 6), 0.0);
  EXPECT_EQ(threshold_outer_work(1000, 3.0, 12, 12), 0.0);
  EXPECT_NEAR(threshold_outer_work(16, 1.0, 8, 16), 1.142857, 1e-6);
}

TEST(ThresholdTest, PreconditionViolations) {
  EXPECT_THROW(threshold_outer_work(16, 1.0, 1, 16), std::domain_error);
  EXPECT_THROW(threshold_outer_work(16, 1.0, 8, 4), std::domain_error);
}

// ---------------------------------------------------------------------------
// Simulator against the closed form and the reference model

TEST(SimulateTest, UnevenDistributionAnomaly) {
  SimProgram p = make_two_level_nest(8, 16, 0.0, 1.0);
  EXPECT_EQ(simulate(p, 6, StaticPolicy{0}).total_time, 32.0);
  EXPECT_EQ(simulate(p, 6, StaticPolicy{1}).total_time, 24.0);
}

TEST(SimulateTest, OracleEquivalenceOnDivisibleChunks) {
  int checked = 0;
  for (std::int64_t threads : {1, 2, 4, 8}) {
    for (std::int64_t o_mult : {1, 2, 3}) {
      for (std::int64_t i_mult : {1, 2, 5}) {
        for (double to : {0.0, 0.25, 0.079}) {
          for (double ti : {1.0, 0.0409, 0.5}) {
            std::int64_t o = threads * o_mult;
            std::int64_t i = threads * i_mult;
            SimProgram p = make_two_level_nest(o, i, to, ti);
            double outer = simulate(p, threads, StaticPolicy{0}).total_time;
            double inner = simulate(p, threads, StaticPolicy{1}).total_time;
            EXPECT_TRUE(near(outer, analytic_outer(o, i, to, ti, threads)))
                << o << " " << i << " " << to << " " << ti << " " << threads;
            EXPECT_TRUE(near(inner, analytic_inner(o, i, to, ti, threads)));
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(SimulateTest, MatchesReferenceModel) {
  std::mt19937 rng(123);
  for (int n = 0; n < 300; ++n) {
    SimProgram p = random_program(rng, n % 2 == 1);
    int threads = std::uniform_int_distribution<int>(1, 16)(rng);
    SCOPED_TRACE(format_scenario(p) + "threads: " + std::to_string(threads));
    for (GenerationMode mode : kModes) {
      SimReport r = simulate(p, threads, DeciderKind::kHeuristic, mode);
      RefResult ref = Reference(p, threads, std::nullopt, mode).run();
      EXPECT_TRUE(near(r.total_time, ref.time, 1e-9)) << r.total_time << " vs " << ref.time;
      EXPECT_EQ(static_cast<std::int64_t>(r.trace.size()), ref.decisions);
      EXPECT_EQ(r.bookkeeping_ops, ref.bookkeeping);
      for (std::size_t k = 0; k < p.levels.size(); ++k) {
        EXPECT_EQ(r.per_level_parallel_counts.at(p.levels[k].name),
                  ref.parallel[static_cast<int>(k)]);
      }
    }
    int level = std::uniform_int_distribution<int>(0, static_cast<int>(p.levels.size()) - 1)(rng);
    SimReport s = simulate(p, threads, StaticPolicy{level});
    RefResult sref = Reference(p, threads, level, GenerationMode::kDuplicate).run();
    EXPECT_TRUE(near(s.total_time, sref.time, 1e-9));
    EXPECT_TRUE(s.trace.empty());
    EXPECT_EQ(s.bookkeeping_ops, 0);
  }
}

TEST(SimulateTest, SynthEightThreadsHeuristicParallelisesOuter) {
  SimProgram p = load_scenario(scenario_dir() / "synth.yaml");
  SimReport r = simulate(p, 8, DeciderKind::kHeuristic);
  for (double t : r.repeat_times) EXPECT_EQ(t, 16.0);
  EXPECT_EQ(r.per_level_parallel_counts.at("outer"), p.repeats);
  EXPECT_EQ(r.per_level_parallel_counts.at("inner"), 0);
}

TEST(SimulateTest, HeuristicWrongChoiceAboveBreakEven) {
  SimProgram p = load_scenario(scenario_dir() / "synth_outer_work.yaml");
  ASSERT_GT(p.levels[0].pre_work, threshold_outer_work(16, p.levels[1].body_work, 8, 16));
  SimReport h = simulate(p, 16, DeciderKind::kHeuristic);
  EXPECT_EQ(h.per_level_parallel_counts.at("outer"), 0);
  EXPECT_EQ(h.per_level_parallel_counts.at("inner"), p.repeats * 8);
  for (DeciderKind k : {DeciderKind::kProfiling, DeciderKind::kRelaxedProfiling}) {
    EXPECT_LT(simulate(p, 16, k).total_time, h.total_time) << to_string(k);
  }
}

TEST(SimulateTest, CfdHeuristicSwitchesLevelOnAlteredBlocks) {
  SimProgram p = load_scenario(scenario_dir() / "cfd.yaml");
  SimReport r = simulate(p, 16, DeciderKind::kHeuristic);
  // j = 2496 blocks parallelise j_cell, j = 8 blocks fall through to i_cell.
  const std::int64_t visits_per_block = p.repeats * 4;
  EXPECT_EQ(r.per_level_parallel_counts.at("block"), 0);
  EXPECT_EQ(r.per_level_parallel_counts.at("harmonic"), 0);
  EXPECT_EQ(r.per_level_parallel_counts.at("j_cell"), 2 * visits_per_block);
  EXPECT_EQ(r.per_level_parallel_counts.at("i_cell"), 2 * visits_per_block * 8);
  for (const auto& t : r.trace) {
    if (decider::version_of(t.decision) == decider::Version::kParallel) {
      EXPECT_GE(t.iters, 16) << "parallel level must occupy all 16 threads";
    }
  }
}

TEST(SimulateTest, InvalidInputs) {
  SimProgram p = make_two_level_nest(4, 4, 0, 1);
  EXPECT_THROW(simulate(p, 0, DeciderKind::kHeuristic), std::invalid_argument);
  EXPECT_THROW(simulate(p, 2, StaticPolicy{2}), std::invalid_argument);
  p.levels[1].count = CountTable{{1, 2}, 0};
  EXPECT_THROW(simulate(p, 2, DeciderKind::kHeuristic), ScenarioError);
}

TEST(SimulateTest, NonParallelisableLevelsAreNeverDecided) {
  SimProgram p = make_two_level_nest(4, 64, 0, 1);
  p.levels[1].parallelisable = false;
  SimReport r = simulate(p, 8, DeciderKind::kHeuristic);
  for (const auto& t : r.trace) EXPECT_EQ(t.loop_id, 0);
  EXPECT_EQ(r.trace.size(), 1u);
}

TEST(SimulateTest, PerturbationOnlyAffectsProfiledTimings) {
  SimProgram p = load_scenario(scenario_dir() / "synth_outer_work.yaml");
  SimProgram noisy = p;
  noisy.perturbation = 1.0;
  EXPECT_EQ(simulate(p, 16, DeciderKind::kHeuristic), simulate(noisy, 16, DeciderKind::kHeuristic));
  // A large additive perturbation on both timings leaves the ordering intact.
  EXPECT_EQ(simulate(noisy, 16, DeciderKind::kProfiling).per_level_parallel_counts,
            simulate(p, 16, DeciderKind::kProfiling).per_level_parallel_counts);
}

// ---------------------------------------------------------------------------
// Properties

TEST(SimulatePropertyTest, TotalTimeNonIncreasingInThreadsForFixedDecisions) {
  std::mt19937 rng(55);
  for (int n = 0; n < 200; ++n) {
    SimProgram p = random_program(rng, n % 2 == 1, /*tables=*/false);
    int level = std::uniform_int_distribution<int>(0, static_cast<int>(p.levels.size()) - 1)(rng);
    // Region costs start at two threads, so compare from there when present.
    int first = n % 2 == 1 ? 2 : 1;
    double prev = simulate(p, first, StaticPolicy{level}).total_time;
    for (int t = first + 1; t <= 16; ++t) {
      double cur = simulate(p, t, StaticPolicy{level}).total_time;
      EXPECT_LE(cur, prev * (1 + 1e-12)) << t;
      prev = cur;
    }
  }
}

// Block scheduling of unequal iterations is not monotone: costs 0,0,1,1,0
// split as {0,0,1}{1,0} over two threads but {0,0}{1,1}{0} over three.
TEST(SimulatePropertyTest, UnevenIterationsCanSlowDownWithMoreThreads) {
  SimProgram p;
  p.levels = {{"outer", std::int64_t{5}, 0.0, 0.0, true, 1.0},
              {"inner", CountTable{{0, 0, 1, 1, 0}, 0}, 0.0, 1.0, true, 1.0}};
  EXPECT_EQ(simulate(p, 2, StaticPolicy{0}).total_time, 1.0);
  EXPECT_EQ(simulate(p, 3, StaticPolicy{0}).total_time, 2.0);
}

TEST(SimulatePropertyTest, TotalTimeNonDecreasingInOverheads) {
  std::mt19937 rng(56);
  for (int n = 0; n < 200; ++n) {
    SimProgram p = random_program(rng, true);
    int threads = std::uniform_int_distribution<int>(1, 16)(rng);
    for (GenerationMode mode : kModes) {
      double base = simulate(p, threads, DeciderKind::kHeuristic, mode).total_time;
      for (double OverheadModel::*field : {&OverheadModel::region_create,
                                           &OverheadModel::decision_call,
                                           &OverheadModel::instrument_call}) {
        SimProgram more = p;
        more.overheads.*field += 0.25;
        EXPECT_GE(simulate(more, threads, DeciderKind::kHeuristic, mode).total_time, base);
      }
    }
  }
}

// ompif never beats duplicate when regions cost something, and loses
// whenever a serial decision happened.
TEST(SimulatePropertyTest, OmpIfDominance) {
  std::mt19937 rng(57);
  int strict = 0;
  for (int n = 0; n < 200; ++n) {
    SimProgram p = random_program(rng, true);
    int threads = std::uniform_int_distribution<int>(1, 16)(rng);
    for (DeciderKind kind : kKinds) {
      SimReport dup = simulate(p, threads, kind, GenerationMode::kDuplicate);
      SimReport ompif = simulate(p, threads, kind, GenerationMode::kOmpIf);
      EXPECT_GE(ompif.total_time, dup.total_time);
      bool serial = std::any_of(dup.trace.begin(), dup.trace.end(), [](const auto& t) {
        return decider::version_of(t.decision) == decider::Version::kSerial;
      });
      if (serial) {
        EXPECT_GT(ompif.total_time, dup.total_time);
        ++strict;
      }
    }
  }
  EXPECT_GT(strict, 0);
}

// One thread: serial work plus exactly the decision and instrumentation
// charges, whatever the decider.
TEST(SimulatePropertyTest, SerialBaselineAtOneThread) {
  std::mt19937 rng(58);
  for (int n = 0; n < 200; ++n) {
    SimProgram p = random_program(rng, true);
    SimProgram bare = p;
    bare.overheads = {};
    double serial = Reference(bare, 1, std::nullopt, GenerationMode::kDuplicate).run().time;
    for (DeciderKind kind : kKinds) {
      SimReport r = simulate(p, 1, kind);
      double charges = static_cast<double>(r.trace.size()) * p.overheads.decision_call +
                       static_cast<double>(r.bookkeeping_ops) * p.overheads.instrument_call;
      EXPECT_TRUE(near(r.total_time, serial + charges, 1e-9))
          << to_string(kind) << " " << r.total_time << " vs " << serial + charges;
    }
  }
}

TEST(SimulatePropertyTest, Deterministic) {
  std::mt19937 rng(59);
  for (int n = 0; n < 50; ++n) {
    SimProgram p = random_program(rng, true);
    for (DeciderKind kind : kKinds) {
      for (GenerationMode mode : kModes) {
        EXPECT_EQ(simulate(p, 6, kind, mode), simulate(p, 6, kind, mode));
      }
    }
  }
}

TEST(SimulatePropertyTest, TraceAndCountsAreConsistent) {
  std::mt19937 rng(60);
  for (int n = 0; n < 100; ++n) {
    SimProgram p = random_program(rng, true);
    int threads = std::uniform_int_distribution<int>(1, 16)(rng);
    for (DeciderKind kind : kKinds) {
      SimReport r = simulate(p, threads, kind);
      EXPECT_GE(r.total_time, 0.0);
      EXPECT_EQ(static_cast<std::int64_t>(r.repeat_times.size()), p.repeats);
      std::map<std::string, std::int64_t> parallel;
      for (const auto& l : p.levels) parallel[l.name] = 0;
      for (const auto& t : r.trace) {
        if (t.outer_active) {
          EXPECT_EQ(decider::version_of(t.decision), decider::Version::kSerial);
        }
        if (decider::version_of(t.decision) == decider::Version::kParallel) {
          ++parallel[p.levels[t.loop_id].name];
        }
      }
      EXPECT_EQ(parallel, r.per_level_parallel_counts);
    }
  }
}

// Accurate profiling counts work on every visit; relaxed only brackets
// decided loops.
TEST(SimulatePropertyTest, RelaxedBookkeepingNeverExceedsAccurate) {
  std::mt19937 rng(61);
  for (int n = 0; n < 100; ++n) {
    SimProgram p = random_program(rng, true);
    int threads = std::uniform_int_distribution<int>(1, 16)(rng);
    EXPECT_LE(simulate(p, threads, DeciderKind::kRelaxedProfiling).bookkeeping_ops,
              simulate(p, threads, DeciderKind::kProfiling).bookkeeping_ops);
  }
}

// ---------------------------------------------------------------------------
// Sweep

TEST(SweepTest, CrossingBracketsBreakEven) {
  SimProgram nest = make_two_level_nest(8, 16, 0.0, 0.0409);
  double crossing = sweep_crossing(nest, 8, 16, parse_grid("0:0.1:0.001"));
  EXPECT_GE(crossing, 0.046);
  EXPECT_LE(crossing, 0.048);
  EXPECT_LE(std::abs(crossing - threshold_outer_work(16, 0.0409, 8, 16)), 0.001);
}

TEST(SweepTest, CrossingAtZeroWhenInnerNeverHelps) {
  EXPECT_EQ(sweep_crossing(make_two_level_nest(8, 16, 0, 0.0), 8, 16, parse_grid("0:1:0.1")), 0.0);
  EXPECT_EQ(sweep_crossing(make_two_level_nest(8, 16, 0, 1.0), 8, 8, parse_grid("0:1:0.1")), 0.0);
}

TEST(SweepTest, CrossingMatchesThresholdOverRandomShapes) {
  std::mt19937 rng(62);
  for (int n = 0; n < 60; ++n) {
    int to = std::uniform_int_distribution<int>(2, 8)(rng);
    int ti = to * std::uniform_int_distribution<int>(1, 4)(rng);
    std::int64_t outer = to * std::uniform_int_distribution<int>(1, 3)(rng);
    std::int64_t inner = ti * std::uniform_int_distribution<int>(1, 3)(rng);
    double t_inner = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
    double threshold = threshold_outer_work(inner, t_inner, to, ti);
    double step = std::max(threshold, 0.01) / 50;
    Grid g{0.0, 3 * threshold + step, step};
    double crossing = sweep_crossing(make_two_level_nest(outer, inner, 0, t_inner), to, ti, g);
    EXPECT_LE(std::abs(crossing - threshold), step * (1 + 1e-9))
        << to << "/" << ti << " " << crossing << " vs " << threshold;
  }
}

TEST(SweepTest, GridMustBracket) {
  SimProgram nest = make_two_level_nest(8, 16, 0.0, 0.0409);
  EXPECT_THROW(sweep_crossing(nest, 8, 16, parse_grid("0:0.01:0.001")), std::domain_error);
  EXPECT_THROW(sweep_crossing(nest, 8, 16, parse_grid("0.05:0.1:0.001")), std::domain_error);
}

TEST(SweepTest, TemplateRestrictions) {
  SimProgram three = load_scenario(scenario_dir() / "nest3.yaml");
  EXPECT_THROW(sweep(three, 8, 16, parse_grid("0:1:0.5")), std::invalid_argument);
  SimProgram costly = make_two_level_nest(8, 16, 0, 1.0);
  costly.overheads.region_create = 0.1;
  EXPECT_THROW(sweep(costly, 8, 16, parse_grid("0:1:0.5")), std::invalid_argument);
}

TEST(SweepTest, ParseGrid) {
  Grid g = parse_grid("0:0.1:0.001");
  EXPECT_EQ(g.size(), 101);
  EXPECT_NEAR(g.at(47), 0.047, 1e-15);
  EXPECT_EQ(parse_grid("1:1:1").size(), 1);
  for (const char* bad : {"", "1:2", "a:2:3", "0:1:0", "2:1:0.5", "-1:1:1", "0:1:1:1"}) {
    EXPECT_THROW(parse_grid(bad), std::invalid_argument) << bad;
  }
}

// ---------------------------------------------------------------------------
// Scenarios

TEST(ScenarioTest, ShippedScenariosLoadAndRoundTrip) {
  auto files = ::preomp::testing::files_in(scenario_dir(), ".yaml");
  ASSERT_GE(files.size(), 4u);
  for (const auto& f : files) {
    SimProgram p = load_scenario(f);
    EXPECT_EQ(parse_scenario(format_scenario(p)), p) << f;
  }
}

TEST(ScenarioTest, RandomProgramsRoundTrip) {
  std::mt19937 rng(63);
  for (int n = 0; n < 100; ++n) {
    SimProgram p = random_program(rng, true);
    EXPECT_EQ(parse_scenario(format_scenario(p)), p) << format_scenario(p);
  }
}

TEST(ScenarioTest, Defaults) {
  SimProgram p = parse_scenario("levels:\n  - name: a\n    count: 3\n    body_work: 1\n");
  EXPECT_EQ(p.repeats, 1);
  EXPECT_EQ(p.overheads, OverheadModel{});
  EXPECT_TRUE(p.levels[0].parallelisable);
  EXPECT_EQ(p.levels[0].threshold, 1.0);
}

TEST(ScenarioTest, CountTableIndexes) {
  SimProgram p = load_scenario(scenario_dir() / "cfd.yaml");
  std::vector<std::int64_t> idx{1, 0, 0, 0};
  EXPECT_EQ(iteration_count(p, 2, idx, 0), 2496);
  EXPECT_EQ(iteration_count(p, 3, idx, 0), 8);
  idx[0] = 2;
  EXPECT_EQ(iteration_count(p, 2, idx, 0), 8);
  SimProgram r = parse_scenario(
      "repeats: 2\nlevels:\n  - name: a\n    count_table: [3, 5]\n    table_index: repeat\n"
      "    body_work: 1\n");
  EXPECT_EQ(iteration_count(r, 0, {}, 1), 5);
  EXPECT_EQ(max_iteration_count(r, 0), 5);
}

TEST(ScenarioTest, Overrides) {
  std::vector<std::string> o{"levels.1.count=32", "overheads.region_create=0.5", "repeats=2",
                             "levels.0.parallelisable=false"};
  SimProgram p = load_scenario(scenario_dir() / "synth.yaml", o);
  EXPECT_EQ(std::get<std::int64_t>(p.levels[1].count), 32);
  EXPECT_EQ(p.overheads.region_create, 0.5);
  EXPECT_EQ(p.repeats, 2);
  EXPECT_FALSE(p.levels[0].parallelisable);

  std::vector<std::string> table{"levels.1.count_table=[1, 2, 3, 4, 5, 6, 7, 8]",
                                 "levels.1.table_index=outer"};
  SimProgram t = load_scenario(scenario_dir() / "synth.yaml", table);
  ASSERT_TRUE(std::holds_alternative<CountTable>(t.levels[1].count));
  EXPECT_EQ(std::get<CountTable>(t.levels[1].count).index_level, 0);

  std::vector<std::string> back{"levels.2.count=100"};
  SimProgram c = load_scenario(scenario_dir() / "cfd.yaml", back);
  EXPECT_EQ(std::get<std::int64_t>(c.levels[2].count), 100);
}

void expect_scenario_error(const std::string& yaml, const std::string& path,
                           std::vector<std::string> overrides = {}) {
  try {
    parse_scenario(yaml, overrides);
    ADD_FAILURE() << "no error for:\n" << yaml;
  } catch (const ScenarioError& e) {
    EXPECT_EQ(std::string(e.what()).rfind(path + ":", 0), 0u) << e.what();
  }
}

TEST(ScenarioTest, ErrorsNameTheKeyPath) {
  const std::string ok = "levels:\n  - name: a\n    count: 3\n  - name: b\n    count: 2\n"
                         "    body_work: 1\n";
  expect_scenario_error("levels: []\n", "levels");
  expect_scenario_error("repeats: 1\n", "levels");
  expect_scenario_error(ok + "bogus: 1\n", "bogus");
  expect_scenario_error(ok + "overheads:\n  region_create: -1\n", "overheads.region_create");
  expect_scenario_error(ok + "overheads:\n  region: 1\n", "overheads.region");
  expect_scenario_error("levels:\n  - name: a\n    count: x\n", "levels.0.count");
  expect_scenario_error("levels:\n  - name: a\n    body_work: 1\n", "levels.0");
  expect_scenario_error("levels:\n  - name: a\n    count: 2\n    pre_work: 1\n", "levels.0.pre_work");
  expect_scenario_error("levels:\n  - name: a\n    count: 2\n    body_work: 1\n"
                        "  - name: b\n    count: 2\n    body_work: 1\n",
                        "levels.0.body_work");
  expect_scenario_error("levels:\n  - name: a\n    count: 2\n  - name: a\n    count: 2\n",
                        "levels.1.name");
  expect_scenario_error("levels:\n  - name: a\n    count: 3\n  - name: b\n"
                        "    count_table: [1, 2]\n    table_index: a\n",
                        "levels.1.count_table");
  expect_scenario_error("levels:\n  - name: a\n    count: 3\n  - name: b\n"
                        "    count_table: [1, 2, 3]\n    table_index: b\n",
                        "levels.1.table_index");
  expect_scenario_error(ok, "levels.7.count", {"levels.7.count=1"});
  expect_scenario_error(ok, "levels.0.colour", {"levels.0.colour=1"});
  expect_scenario_error(ok, "repeats", {"repeats"});
  expect_scenario_error("levels: [", "<scenario>");
}

TEST(ScenarioTest, MissingFile) {
  EXPECT_THROW(load_scenario(scenario_dir() / "nope.yaml"), ScenarioError);
}

TEST(ScenarioTest, FindLevel) {
  SimProgram p = load_scenario(scenario_dir() / "cfd.yaml");
  EXPECT_EQ(find_level(p, "i_cell"), 3);
  EXPECT_EQ(find_level(p, "x"), -1);
}

TEST(ReportTest, YamlAndCsvContainEveryRun) {
  SimProgram p = load_scenario(scenario_dir() / "synth.yaml");
  std::vector<SimRun> runs;
  for (int t : {1, 6}) {
    runs.push_back({t, DeciderKind::kHeuristic, GenerationMode::kDuplicate,
                    simulate(p, t, DeciderKind::kHeuristic)});
  }
  runs.push_back({6, StaticPolicy{0}, GenerationMode::kDuplicate, simulate(p, 6, StaticPolicy{0})});
  std::string yaml = format_report_yaml(p, runs, true);
  EXPECT_EQ(::preomp::testing::count_occurrences(yaml, "total_time: "), 3);
  EXPECT_EQ(::preomp::testing::count_occurrences(yaml, "\n---\n"), 2);
  EXPECT_NE(yaml.find("decider: static:outer"), std::string::npos);
  EXPECT_NE(yaml.find("total_time: 128\n"), std::string::npos);
  EXPECT_NE(yaml.find("  - \"0,0,8,6,0,-,parallel,meets_threshold\""), std::string::npos);
  EXPECT_EQ(format_report_yaml(p, runs, false).find("trace:"), std::string::npos);

  std::string csv = format_report_csv(p, runs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "threads,decider,mode,total_time,bookkeeping_ops,outer_parallel,inner_parallel");
  EXPECT_EQ(::preomp::testing::count_occurrences(csv, "\n"), 4);
  EXPECT_NE(csv.find("\n6,static:outer,duplicate,128,0,4,0\n"), std::string::npos) << csv;
}

}  // namespace
}  // namespace preomp::costsim
