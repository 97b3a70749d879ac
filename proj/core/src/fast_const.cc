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

#include "lexmatch/fast_const.h"

#include <algorithm>
#include <array>
#include <vector>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"
#include "lexmatch/leximin.h"

namespace lexmatch {
namespace {

void CheckTwoStrict(const Instance& instance) {
  if (instance.m() != 2) {
    throw Error(ErrorCode::kPrecondition, "exactly two colleges required");
  }
  const Classification c = Classify(instance);
  if (!c.strict_students || !c.strict_colleges) {
    throw Error(ErrorCode::kNonStrict, "preferences must be strict");
  }
}

int Favourite(const Instance& in, int i) {
  return in.u(i, 1) < in.u(i, 0) ? 0 : 1;
}

}  // namespace

bool IsStableM2(const Instance& instance, const Matching& matching) {
  CheckTwoStrict(instance);
  if (!matching.FitsInstance(instance) || !matching.AllStudentsMatched()) {
    throw Error(ErrorCode::kPrecondition, "every student must be matched");
  }
  const int n = instance.n();
  for (int j = 0; j < 2; ++j) {
    const int other = 1 - j;
    std::vector<int> own;
    std::vector<int> foreign;
    for (int i = 0; i < n; ++i) {
      (Favourite(instance, i) == j ? own : foreign).push_back(i);
    }
    auto by = [&](int college) {
      return [&instance, college](int a, int b) {
        return instance.v(college, b) < instance.v(college, a);
      };
    };
    // own sorted best-first for c_j; foreign sorted worst-first for c_other.
    std::sort(own.begin(), own.end(), by(j));
    std::sort(foreign.begin(), foreign.end(), by(other));
    std::reverse(foreign.begin(), foreign.end());
    int kj = 0;
    int lj = 0;
    for (int i : matching.students_of(j)) {
      (Favourite(instance, i) == j ? kj : lj)++;
    }
    for (int t = 0; t < static_cast<int>(own.size()); ++t) {
      if ((matching.college_of(own[t]) == j) != (t < kj)) return false;
    }
    for (int t = 0; t < static_cast<int>(foreign.size()); ++t) {
      if ((matching.college_of(foreign[t]) == j) != (t < lj)) return false;
    }
    if (lj > 0 && kj < static_cast<int>(own.size())) {
      const Value& best_outside = instance.v(j, own[kj]);
      const Value* worst_inside = nullptr;
      for (int t = 0; t < lj; ++t) {
        const Value& x = instance.v(j, foreign[t]);
        if (worst_inside == nullptr || x < *worst_inside) worst_inside = &x;
      }
      if (!(best_outside < *worst_inside)) return false;
    }
  }
  return true;
}

SolverReport FastConst(const Instance& instance) {
  CheckTwoStrict(instance);
  const int n = instance.n();
  if (instance.capacity(0) < n || instance.capacity(1) < n) {
    throw Error(ErrorCode::kNotAdmissible,
                "FastConst needs non-binding capacities b_j = n");
  }
  std::int64_t steps = n;
  std::vector<int> alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = Favourite(instance, i);
  std::vector<int> mu = alpha;
  std::vector<Value> cv(2);
  for (int i = 0; i < n; ++i) cv[mu[i]] += instance.v(mu[i], i);

  // forbidden[i][j]: s_i may not be matched to c_j.
  std::vector<std::array<char, 2>> forbidden(n, {0, 0});
  int left = cv[0] <= cv[1] ? 0 : 1;
  auto forbid_irreversible = [&]() {
    for (int i = 0; i < n; ++i) {
      const int away = 1 - alpha[i];
      if (instance.u(i, away) < cv[left]) forbidden[i][away] = 1;
    }
    steps += n;
  };
  forbid_irreversible();

  std::vector<int> best = mu;
  std::vector<Value> best_values =
      ComputeLeximinTuple(instance, Matching(2, best)).values();
  while (true) {
    const int right = 1 - left;
    int bottom = -1;
    for (int i = 0; i < n; ++i) {
      if (mu[i] != right) continue;
      if (bottom < 0 || instance.v(right, i) < instance.v(right, bottom)) {
        bottom = i;
      }
    }
    steps += n;
    if (bottom < 0 || forbidden[bottom][left]) break;
    mu[bottom] = left;
    cv[right] -= instance.v(right, bottom);
    cv[left] += instance.v(left, bottom);
    std::vector<Value> values =
        ComputeLeximinTuple(instance, Matching(2, mu)).values();
    steps += n + 2;
    if (CompareValueLists(values, best_values) == Order::kGreater) {
      best = mu;
      best_values = std::move(values);
    }
    left = cv[0] <= cv[1] ? 0 : 1;
    forbid_irreversible();
    for (int i = 0; i < n; ++i) {
      if (!(instance.v(right, bottom) < instance.v(right, i))) {
        forbidden[i][right] = 1;
      }
    }
    steps += n;
  }
  SolverReport report;
  report.algorithm = "fast-const";
  report.matching = Matching(2, best);
  report.leximin = ComputeLeximinTuple(instance, report.matching);
  report.steps = steps;
  return report;
}

}  // namespace lexmatch
