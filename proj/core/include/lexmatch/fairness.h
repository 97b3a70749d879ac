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

#ifndef LEXMATCH_FAIRNESS_H_
#define LEXMATCH_FAIRNESS_H_

#include "lexmatch/instance.h"
#include "lexmatch/matching.h"
#include "lexmatch/value.h"

namespace lexmatch {

struct EnvyTotals {
  // sum_i sum_j max(0, u_i(c_j) - u_i(mu(s_i))) over the occupied colleges
  // c_j other than mu(s_i).
  Value students;
  // sum_j sum_j' max(0, v_j(mu(c_j')) - v_j(mu(c_j))), with v_j applied
  // additively to the rival's set.
  Value colleges;
  Value total;
};

struct Welfare {
  Value egalitarian;  // min over all n + m agents
  Value nash;         // product over all n + m agents
  Value utilitarian;  // sum over all n + m agents
};

struct FairnessReport {
  EnvyTotals envy;
  bool ef1_colleges = false;
  bool efx_colleges = false;
  // Each student holds at most one college, so student-side EF1 always holds.
  bool ef1_students = true;
  Welfare welfare;
};

EnvyTotals ComputeEnvy(const Instance& instance, const Matching& matching);

// For every ordered pair (j, j'), some g in mu(c_j') has
// v_j(mu(c_j)) >= v_j(mu(c_j') \ {g}). Empty rival sets pass.
bool IsEf1Colleges(const Instance& instance, const Matching& matching);

// As IsEf1Colleges, but for every g in mu(c_j').
bool IsEfxColleges(const Instance& instance, const Matching& matching);

Welfare ComputeWelfare(const Instance& instance, const Matching& matching);

FairnessReport EvaluateFairness(const Instance& instance,
                                const Matching& matching);

}  // namespace lexmatch

#endif  // LEXMATCH_FAIRNESS_H_
