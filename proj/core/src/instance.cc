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

#include "lexmatch/instance.h"

#include <string>
#include <utility>

#include "lexmatch/error.h"

namespace lexmatch {

Instance::Instance(ValueTable student_values, ValueTable college_values,
                   std::vector<int> capacities) {
  n_ = static_cast<int>(student_values.size());
  m_ = static_cast<int>(college_values.size());
  if (n_ < 1 || m_ < 1) {
    throw Error(ErrorCode::kInvalidInput, "need n >= 1 and m >= 1");
  }
  if (static_cast<int>(capacities.size()) != m_) {
    throw Error(ErrorCode::kInvalidInput, "capacities must have m entries");
  }
  student_values_.reserve(static_cast<size_t>(n_) * m_);
  for (auto& row : student_values) {
    if (static_cast<int>(row.size()) != m_) {
      throw Error(ErrorCode::kInvalidInput,
                  "student_values rows must have m entries");
    }
    for (auto& x : row) student_values_.push_back(std::move(x));
  }
  college_values_.reserve(static_cast<size_t>(n_) * m_);
  for (auto& row : college_values) {
    if (static_cast<int>(row.size()) != n_) {
      throw Error(ErrorCode::kInvalidInput,
                  "college_values rows must have n entries");
    }
    for (auto& x : row) college_values_.push_back(std::move(x));
  }
  for (int b : capacities) {
    if (b < 1 || b > n_) {
      throw Error(ErrorCode::kInvalidInput,
                  "capacity " + std::to_string(b) + " outside [1, n]");
    }
  }
  capacities_ = std::move(capacities);
}

Instance Instance::Isometric(const ValueTable& matrix,
                             std::vector<int> capacities) {
  const int n = static_cast<int>(matrix.size());
  const int m = n == 0 ? 0 : static_cast<int>(matrix[0].size());
  ValueTable college(m, std::vector<Value>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != m) {
      throw Error(ErrorCode::kInvalidInput, "ragged valuation matrix");
    }
    for (int j = 0; j < m; ++j) college[j][i] = matrix[i][j];
  }
  return Instance(matrix, std::move(college), std::move(capacities));
}

bool Instance::HasNonBindingCapacities() const {
  for (int b : capacities_) {
    if (b < n_ - m_ + 1) return false;
  }
  return true;
}

Instance Instance::WithCapacities(std::vector<int> capacities) const {
  return Instance(StudentTable(), CollegeTable(), std::move(capacities));
}

ValueTable Instance::StudentTable() const {
  ValueTable t(n_, std::vector<Value>(m_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < m_; ++j) t[i][j] = u(i, j);
  }
  return t;
}

ValueTable Instance::CollegeTable() const {
  ValueTable t(m_, std::vector<Value>(n_));
  for (int j = 0; j < m_; ++j) {
    for (int i = 0; i < n_; ++i) t[j][i] = v(j, i);
  }
  return t;
}

std::vector<int> SurplusCapacities(int n, int m) {
  const int b = n - m + 1 < 1 ? 1 : n - m + 1;
  return std::vector<int>(m, b);
}

}  // namespace lexmatch
