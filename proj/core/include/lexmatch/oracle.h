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

#ifndef LEXMATCH_ORACLE_H_
#define LEXMATCH_ORACLE_H_

#include <cstdint>

#include "lexmatch/instance.h"
#include "lexmatch/report.h"

namespace lexmatch {

struct OracleBudget {
  std::uint64_t max_enumerated = 10'000'000;
};

// Exhaustive leximin maximum over stable matchings. Ranked instances walk
// the boundary vectors; all others enumerate every assignment of students to
// a college or to nobody, pruned by capacity and completeness, and keep the
// stable ones. The first maximum found wins ties.
//
// require_complete: no agent may be unmatched.
// respect_capacities: |mu(c_j)| <= b_j.
//
// Errors: kBudgetExceeded when more than budget.max_enumerated candidates
// would be examined, kInfeasible when no candidate qualifies.
SolverReport OracleLeximin(const Instance& instance, bool require_complete,
                           bool respect_capacities, OracleBudget budget = {});

// The exhaustive assignment search regardless of classification.
SolverReport OracleLeximinGeneral(const Instance& instance,
                                  bool require_complete,
                                  bool respect_capacities,
                                  OracleBudget budget = {});

}  // namespace lexmatch

#endif  // LEXMATCH_ORACLE_H_
