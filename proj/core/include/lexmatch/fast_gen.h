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

#ifndef LEXMATCH_FAST_GEN_H_
#define LEXMATCH_FAST_GEN_H_

#include <optional>
#include <set>
#include <utility>

#include "lexmatch/instance.h"
#include "lexmatch/leximin.h"
#include "lexmatch/matching.h"
#include "lexmatch/ranked.h"
#include "lexmatch/report.h"

namespace lexmatch {

// Leximin-optimal complete stable matching for general ranked valuations.
// Dynamic program over (college, students placed so far) that keeps the
// leximin-best prefix multiset for every split point. O(m n^2) candidate
// blocks, each compared in O(n + m).
//
// FastGen requires non-binding capacities (b_j >= n - m + 1).
// Errors: kNotRanked, kNotAdmissible, kInfeasible.
SolverReport FastGen(const Instance& instance);
SolverReport CapFastGen(const Instance& instance);

// Fix-set bookkeeping of the greedy walk.
struct FixSets {
  std::set<int> upper;
  std::set<int> lower;
  // (j, blocker): j stays frozen until the walk reaches past `blocker`.
  std::set<std::pair<int, int>> soft;
};

// Agent responsible for L(mu_new) < L(mu_old). At the first index t where
// the new tuple is smaller, the culprit is the first agent holding value
// L_new[t] whose value changed, or failing that the first agent that fell
// to L_new[t] or below. Returns nullopt when mu_new does not lose.
std::optional<Agent> SourceDec(const Instance& instance,
                               const Matching& mu_new,
                               const Matching& mu_old);

struct Preprocessed {
  BoundaryVector boundary;
  FixSets fix;
};

// Student-optimal capacity-feasible boundary plus the initial fix sets,
// including the early fix of every college from c_j onwards when some
// single-student college's member envies no college value.
// Errors: kInfeasible.
Preprocessed CapPreprocess(const Instance& instance);

// The fix-set hill climb with look-ahead over shifts into the weakest
// unfixed college, and outer reruns for colleges that gave students away
// after filling up. Always returns a complete stable capacity-feasible
// matching, but can stop at a local optimum; use FastGen when the optimum
// is required.
SolverReport FastGenGreedy(const Instance& instance);
SolverReport CapFastGenGreedy(const Instance& instance);

}  // namespace lexmatch

#endif  // LEXMATCH_FAST_GEN_H_
