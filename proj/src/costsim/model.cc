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

#include "preomp/costsim/model.h"

#include <stdexcept>

#include <fmt/format.h>

namespace preomp::costsim {

namespace {

std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return (n + d - 1) / d; }

void check_shape(std::int64_t outer_iters, std::int64_t inner_iters,
                 double t_outer, double t_inner, int threads) {
  if (outer_iters < 0 || inner_iters < 0) {
    throw std::invalid_argument("iteration counts must be >= 0");
  }
  if (!(t_outer >= 0.0) || !(t_inner >= 0.0)) {
    throw std::invalid_argument("durations must be >= 0");
  }
  if (threads < 1) {
    throw std::invalid_argument(fmt::format("threads must be >= 1, got {}", threads));
  }
}

}  // namespace

double analytic_outer(std::int64_t outer_iters, std::int64_t inner_iters,
                      double t_outer, double t_inner, int outer_threads) {
  check_shape(outer_iters, inner_iters, t_outer, t_inner, outer_threads);
  return static_cast<double>(ceil_div(outer_iters, outer_threads)) *
         (t_outer + static_cast<double>(inner_iters) * t_inner);
}

double analytic_inner(std::int64_t outer_iters, std::int64_t inner_iters,
                      double t_outer, double t_inner, int inner_threads) {
  check_shape(outer_iters, inner_iters, t_outer, t_inner, inner_threads);
  return static_cast<double>(outer_iters) *
         (t_outer +
          static_cast<double>(ceil_div(inner_iters, inner_threads)) * t_inner);
}

double threshold_outer_work(std::int64_t inner_iters, double t_inner,
                            int outer_threads, int inner_threads) {
  if (outer_threads < 2) {
    throw std::domain_error(fmt::format(
        "outer_threads must be >= 2 (got {}): the threshold divides by "
        "1 - 1/outer_threads",
        outer_threads));
  }
  if (inner_threads < outer_threads) {
    throw std::domain_error(
        fmt::format("inner_threads ({}) must be >= outer_threads ({})",
                    inner_threads, outer_threads));
  }
  const double to = outer_threads;
  const double ti = inner_threads;
  return static_cast<double>(inner_iters) * t_inner * (1.0 / to - 1.0 / ti) /
         (1.0 - 1.0 / to);
}

}  // namespace preomp::costsim
