// Copyright 2026 The lexmatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXMATCH_FAST_H_
#define LEXMATCH_FAST_H_

#include <functional>

#include "lexmatch/instance.h"
#include "lexmatch/ranked.h"
#include "lexmatch/report.h"

namespace lexmatch {

// Called with every boundary vector the solver moves through, starting with
// the student-optimal one.
using FastObserver = std::function<void(const BoundaryVector&)>;

// Leximin-optimal complete stable matching for ranked isometric valuations
// (or the relaxed admissible class, see IsFastAdmissible). Capacities must
// not bind: b_j >= n - m + 1.
//
// Errors: kNotAdmissible, kInfeasible when n < m.
SolverReport Fast(const Instance& instance,
                  const FastObserver& observer = nullptr);

// Same model with arbitrary capacities b_j >= 1.
//
// Errors: kNotAdmissible, kInfeasible when n < m or sum(b) < n.
SolverReport CapFast(const Instance& instance,
                     const FastObserver& observer = nullptr);

}  // namespace lexmatch

#endif  // LEXMATCH_FAST_H_
