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

#ifndef LEXMATCH_INSTANCE_H_
#define LEXMATCH_INSTANCE_H_

#include <vector>

#include "lexmatch/value.h"

namespace lexmatch {

using ValueTable = std::vector<std::vector<Value>>;

// n students, m colleges. u(i, j) is student i's value for college j and
// v(j, i) is college j's value for student i. Indices are 0-based; a lower
// index means a higher rank in ranked instances.
class Instance {
 public:
  // student_values is n x m, college_values is m x n, capacities has m
  // entries in [1, n]. Throws Error(kInvalidInput) on any mismatch.
  Instance(ValueTable student_values, ValueTable college_values,
           std::vector<int> capacities);

  // u(i, j) = v(j, i) = matrix[i][j].
  static Instance Isometric(const ValueTable& matrix,
                            std::vector<int> capacities);

  int n() const { return n_; }
  int m() const { return m_; }
  const Value& u(int student, int college) const {
    return student_values_[student * m_ + college];
  }
  const Value& v(int college, int student) const {
    return college_values_[college * n_ + student];
  }
  int capacity(int college) const { return capacities_[college]; }
  const std::vector<int>& capacities() const { return capacities_; }

  // A capacity vector that can never bind a complete matching:
  // b_j >= n - m + 1 for every college.
  bool HasNonBindingCapacities() const;

  Instance WithCapacities(std::vector<int> capacities) const;

  ValueTable StudentTable() const;
  ValueTable CollegeTable() const;

  friend bool operator==(const Instance& a, const Instance& b) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Value> student_values_;
  std::vector<Value> college_values_;
  std::vector<int> capacities_;
};

// Capacities n - m + 1 for all colleges, the largest block any college can
// hold in a complete matching.
std::vector<int> SurplusCapacities(int n, int m);

}  // namespace lexmatch

#endif  // LEXMATCH_INSTANCE_H_
