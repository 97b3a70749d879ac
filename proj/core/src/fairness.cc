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

#include "lexmatch/fairness.h"

#include <vector>

#include "lexmatch/error.h"

namespace lexmatch {
namespace {

void CheckFits(const Instance& instance, const Matching& matching) {
  if (!matching.FitsInstance(instance)) {
    throw Error(ErrorCode::kInvalidInput, "matching does not fit instance");
  }
}

Value BundleValue(const Instance& in, int evaluator,
                  const std::vector<int>& bundle) {
  Value sum;
  for (int i : bundle) sum += in.v(evaluator, i);
  return sum;
}

// Worst and best single student of `bundle` under `evaluator`.
std::pair<Value, Value> Extremes(const Instance& in, int evaluator,
                                 const std::vector<int>& bundle) {
  Value lo = in.v(evaluator, bundle.front());
  Value hi = lo;
  for (int i : bundle) {
    const Value& x = in.v(evaluator, i);
    if (x < lo) lo = x;
    if (hi < x) hi = x;
  }
  return {lo, hi};
}

bool EnvyFreeUpTo(const Instance& in, const Matching& mu, bool any_item) {
  for (int j = 0; j < in.m(); ++j) {
    const Value own = BundleValue(in, j, mu.students_of(j));
    for (int r = 0; r < in.m(); ++r) {
      if (r == j || mu.students_of(r).empty()) continue;
      const Value rival = BundleValue(in, j, mu.students_of(r));
      const auto [lo, hi] = Extremes(in, j, mu.students_of(r));
      const Value& removed = any_item ? hi : lo;
      if (own < rival - removed) return false;
    }
  }
  return true;
}

}  // namespace

EnvyTotals ComputeEnvy(const Instance& instance, const Matching& matching) {
  CheckFits(instance, matching);
  const Value zero;
  EnvyTotals out;
  for (int i = 0; i < instance.n(); ++i) {
    const int mine = matching.college_of(i);
    const Value& have = mine == kUnmatched ? zero : instance.u(i, mine);
    for (int j = 0; j < instance.m(); ++j) {
      if (j == mine || matching.students_of(j).empty()) continue;
      out.students += PositivePart(instance.u(i, j), have);
    }
  }
  std::vector<Value> own(instance.m());
  for (int j = 0; j < instance.m(); ++j) {
    own[j] = BundleValue(instance, j, matching.students_of(j));
  }
  for (int j = 0; j < instance.m(); ++j) {
    for (int r = 0; r < instance.m(); ++r) {
      if (r == j) continue;
      out.colleges += PositivePart(
          BundleValue(instance, j, matching.students_of(r)), own[j]);
    }
  }
  out.total = out.students + out.colleges;
  return out;
}

bool IsEf1Colleges(const Instance& instance, const Matching& matching) {
  CheckFits(instance, matching);
  return EnvyFreeUpTo(instance, matching, true);
}

bool IsEfxColleges(const Instance& instance, const Matching& matching) {
  CheckFits(instance, matching);
  return EnvyFreeUpTo(instance, matching, false);
}

Welfare ComputeWelfare(const Instance& instance, const Matching& matching) {
  const AgentValues values = ComputeAgentValues(instance, matching);
  Welfare w;
  w.nash = Value(1);
  bool first = true;
  auto add = [&](const Value& x) {
    if (first || x < w.egalitarian) w.egalitarian = x;
    first = false;
    w.nash *= x;
    w.utilitarian += x;
  };
  for (const Value& x : values.students) add(x);
  for (const Value& x : values.colleges) add(x);
  return w;
}

FairnessReport EvaluateFairness(const Instance& instance,
                                const Matching& matching) {
  FairnessReport r;
  r.envy = ComputeEnvy(instance, matching);
  r.ef1_colleges = IsEf1Colleges(instance, matching);
  r.efx_colleges = IsEfxColleges(instance, matching);
  r.welfare = ComputeWelfare(instance, matching);
  return r;
}

}  // namespace lexmatch
