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

#include "lexmatch/matching.h"

#include <string>
#include <utility>

#include "lexmatch/error.h"

namespace lexmatch {

Matching::Matching(int num_colleges, std::vector<int> assignment)
    : assignment_(std::move(assignment)), members_(num_colleges) {
  if (num_colleges < 0) {
    throw Error(ErrorCode::kInvalidInput, "negative college count");
  }
  for (int i = 0; i < static_cast<int>(assignment_.size()); ++i) {
    const int j = assignment_[i];
    if (j == kUnmatched) continue;
    if (j < 0 || j >= num_colleges) {
      throw Error(ErrorCode::kInvalidInput,
                  "student " + std::to_string(i) + " assigned to college " +
                      std::to_string(j) + " out of range");
    }
    members_[j].push_back(i);
  }
}

Matching Matching::Empty(int num_students, int num_colleges) {
  return Matching(num_colleges, std::vector<int>(num_students, kUnmatched));
}

bool Matching::AllStudentsMatched() const {
  for (int j : assignment_) {
    if (j == kUnmatched) return false;
  }
  return true;
}

bool Matching::IsComplete() const {
  if (!AllStudentsMatched()) return false;
  for (const auto& s : members_) {
    if (s.empty()) return false;
  }
  return true;
}

bool Matching::RespectsCapacities(const Instance& instance) const {
  for (int j = 0; j < num_colleges(); ++j) {
    if (static_cast<int>(members_[j].size()) > instance.capacity(j)) {
      return false;
    }
  }
  return true;
}

bool Matching::FitsInstance(const Instance& instance) const {
  return num_students() == instance.n() && num_colleges() == instance.m();
}

AgentValues ComputeAgentValues(const Instance& instance,
                               const Matching& matching) {
  if (!matching.FitsInstance(instance)) {
    throw Error(ErrorCode::kInvalidInput, "matching does not fit instance");
  }
  AgentValues out;
  out.students.resize(instance.n());
  out.colleges.resize(instance.m());
  for (int i = 0; i < instance.n(); ++i) {
    const int j = matching.college_of(i);
    if (j == kUnmatched) continue;
    out.students[i] = instance.u(i, j);
    out.colleges[j] += instance.v(j, i);
  }
  return out;
}

}  // namespace lexmatch
