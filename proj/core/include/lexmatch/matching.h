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

#ifndef LEXMATCH_MATCHING_H_
#define LEXMATCH_MATCHING_H_

#include <vector>

#include "lexmatch/instance.h"
#include "lexmatch/value.h"

namespace lexmatch {

inline constexpr int kUnmatched = -1;

// Student -> college assignment with the inverse college -> students view.
// Student lists are kept in ascending index order.
class Matching {
 public:
  Matching() = default;
  Matching(int num_colleges, std::vector<int> assignment);

  static Matching Empty(int num_students, int num_colleges);

  int num_students() const { return static_cast<int>(assignment_.size()); }
  int num_colleges() const { return static_cast<int>(members_.size()); }
  int college_of(int student) const { return assignment_[student]; }
  const std::vector<int>& students_of(int college) const {
    return members_[college];
  }
  const std::vector<int>& assignment() const { return assignment_; }

  bool AllStudentsMatched() const;
  // No agent on either side is left unmatched.
  bool IsComplete() const;
  bool RespectsCapacities(const Instance& instance) const;
  // Dimensions agree with the instance.
  bool FitsInstance(const Instance& instance) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.assignment_ == b.assignment_ && a.members_.size() == b.members_.size();
  }

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> members_;
};

struct AgentValues {
  std::vector<Value> students;
  std::vector<Value> colleges;
};

// u_i(mu(s_i)) for each student and the additive v_j(mu(c_j)) for each
// college. Unmatched agents get 0.
AgentValues ComputeAgentValues(const Instance& instance,
                               const Matching& matching);

}  // namespace lexmatch

#endif  // LEXMATCH_MATCHING_H_
