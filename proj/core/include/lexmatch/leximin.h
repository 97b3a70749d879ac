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

#ifndef LEXMATCH_LEXIMIN_H_
#define LEXMATCH_LEXIMIN_H_

#include <string>
#include <vector>

#include "lexmatch/instance.h"
#include "lexmatch/matching.h"
#include "lexmatch/value.h"

namespace lexmatch {

struct Agent {
  enum class Kind { kStudent, kCollege };

  Kind kind = Kind::kStudent;
  int index = 0;

  static Agent Student(int i) { return {Kind::kStudent, i}; }
  static Agent College(int j) { return {Kind::kCollege, j}; }
  bool is_student() const { return kind == Kind::kStudent; }
  bool is_college() const { return kind == Kind::kCollege; }
  std::string ToString() const;

  friend bool operator==(const Agent& a, const Agent& b) = default;
};

// All n + m agent values in ascending order. Equal values list students
// before colleges, each side by increasing index.
class LeximinTuple {
 public:
  LeximinTuple() = default;
  LeximinTuple(const std::vector<Value>& student_values,
               const std::vector<Value>& college_values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Value>& values() const { return values_; }
  const Value& operator[](int t) const { return values_[t]; }
  const Agent& agent_at(int t) const { return agent_at_[t]; }
  int position(const Agent& agent) const;
  const Value& value_of(const Agent& agent) const {
    return values_[position(agent)];
  }

 private:
  int num_students_ = 0;
  std::vector<Value> values_;
  std::vector<Agent> agent_at_;
  std::vector<int> pos_;
};

LeximinTuple ComputeLeximinTuple(const Instance& instance,
                                 const Matching& matching);

enum class Order { kLess, kEqual, kGreater };

// Lexicographic comparison of value lists; agent identities are ignored.
// Throws Error(kPrecondition) on a length mismatch.
Order LeximinCompare(const LeximinTuple& a, const LeximinTuple& b);
Order CompareValueLists(const std::vector<Value>& a,
                        const std::vector<Value>& b);

// alpha * optimal[t] <= candidate[t] <= optimal[t] / alpha at every index.
// Requires 0 < alpha <= 1.
bool CheckAlphaApprox(const LeximinTuple& optimal,
                      const LeximinTuple& candidate, const Value& alpha);

const char* OrderName(Order order);

}  // namespace lexmatch

#endif  // LEXMATCH_LEXIMIN_H_
