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

#include "lexmatch/leximin.h"

#include <algorithm>
#include <numeric>

#include "lexmatch/error.h"

namespace lexmatch {

std::string Agent::ToString() const {
  return (is_student() ? "s" : "c") + std::to_string(index);
}

LeximinTuple::LeximinTuple(const std::vector<Value>& student_values,
                           const std::vector<Value>& college_values)
    : num_students_(static_cast<int>(student_values.size())) {
  const int n = num_students_;
  const int total = n + static_cast<int>(college_values.size());
  auto value = [&](int a) -> const Value& {
    return a < n ? student_values[a] : college_values[a - n];
  };
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  // Agent ids already encode the tie-break: students first, then by index.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return value(a) < value(b); });
  values_.reserve(total);
  agent_at_.reserve(total);
  pos_.assign(total, 0);
  for (int t = 0; t < total; ++t) {
    const int a = order[t];
    values_.push_back(value(a));
    agent_at_.push_back(a < n ? Agent::Student(a) : Agent::College(a - n));
    pos_[a] = t;
  }
}

int LeximinTuple::position(const Agent& agent) const {
  const int id = agent.is_student() ? agent.index : num_students_ + agent.index;
  return pos_.at(id);
}

LeximinTuple ComputeLeximinTuple(const Instance& instance,
                                 const Matching& matching) {
  AgentValues values = ComputeAgentValues(instance, matching);
  return LeximinTuple(values.students, values.colleges);
}

Order CompareValueLists(const std::vector<Value>& a,
                        const std::vector<Value>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kPrecondition,
                "leximin tuples of different lengths are not comparable");
  }
  for (size_t t = 0; t < a.size(); ++t) {
    if (a[t] < b[t]) return Order::kLess;
    if (b[t] < a[t]) return Order::kGreater;
  }
  return Order::kEqual;
}

Order LeximinCompare(const LeximinTuple& a, const LeximinTuple& b) {
  return CompareValueLists(a.values(), b.values());
}

bool CheckAlphaApprox(const LeximinTuple& optimal,
                      const LeximinTuple& candidate, const Value& alpha) {
  if (alpha.IsZero() || Value(1) < alpha) {
    throw Error(ErrorCode::kPrecondition, "alpha must lie in (0, 1]");
  }
  if (optimal.size() != candidate.size()) {
    throw Error(ErrorCode::kPrecondition, "tuple length mismatch");
  }
  for (int t = 0; t < optimal.size(); ++t) {
    if (candidate[t] < alpha * optimal[t]) return false;
    if (optimal[t] / alpha < candidate[t]) return false;
  }
  return true;
}

const char* OrderName(Order order) {
  switch (order) {
    case Order::kLess:
      return "LESS";
    case Order::kEqual:
      return "EQUAL";
    case Order::kGreater:
      return "GREATER";
  }
  return "?";
}

}  // namespace lexmatch
