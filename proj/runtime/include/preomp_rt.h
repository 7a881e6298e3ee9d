/* Copyright 2026 The preomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Runtime interface called by code emitted from `preomp transpile`.
 *
 * Every directive loop `id` is bracketed by preomp_enter(id) and
 * preomp_exit(id) in both generated versions. preomp_decide returns nonzero
 * when the loop should run its parallel version; its arguments describe the
 * half-open iteration space [init, bound) with a positive step, and the
 * directive's parallel_threshold.
 *
 * Duplicate mode calls decide, then enter. ompif mode calls enter first and
 * evaluates decide inside the `omp parallel for if(...)` clause, so an
 * implementation must attribute the parallel status of loop `id` from the
 * decision taken after the matching enter.
 *
 * The decider kind and default threshold are read from PREOMP_DECIDER and
 * PREOMP_THRESHOLD at first use.
 */

#ifndef PREOMP_RT_H_
#define PREOMP_RT_H_

#ifdef __cplusplus
extern "C" {
#endif

int preomp_decide(int id, long init, long bound, long step, double threshold);
void preomp_enter(int id);
void preomp_exit(int id);

#ifdef __cplusplus
}
#endif

#endif /* PREOMP_RT_H_ */
