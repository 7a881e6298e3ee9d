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

#ifndef PREOMP_COSTSIM_MODEL_H_
#define PREOMP_COSTSIM_MODEL_H_

#include <cstdint>

namespace preomp::costsim {

// Closed-form times of a two-level nest where each outer iteration does
// t_outer of work and then inner_iters iterations of t_inner each.
// Uneven splits cost the largest chunk. Both throw std::invalid_argument on
// negative counts or durations and threads < 1.

// ceil(outer_iters / outer_threads) * (t_outer + inner_iters * t_inner)
double analytic_outer(std::int64_t outer_iters, std::int64_t inner_iters,
                      double t_outer, double t_inner, int outer_threads);

// outer_iters * (t_outer + ceil(inner_iters / inner_threads) * t_inner)
double analytic_inner(std::int64_t outer_iters, std::int64_t inner_iters,
                      double t_outer, double t_inner, int inner_threads);

// Largest t_outer for which parallelising the inner loop with inner_threads
// beats the outer loop with outer_threads:
//   inner_iters * t_inner * (1/To - 1/Ti) / (1 - 1/To)
// Throws std::domain_error when outer_threads < 2 or
// inner_threads < outer_threads.
double threshold_outer_work(std::int64_t inner_iters, double t_inner,
                            int outer_threads, int inner_threads);

}  // namespace preomp::costsim

#endif  // PREOMP_COSTSIM_MODEL_H_
