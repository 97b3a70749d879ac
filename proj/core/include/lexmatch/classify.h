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

#ifndef LEXMATCH_CLASSIFY_H_
#define LEXMATCH_CLASSIFY_H_

#include <string>

#include "lexmatch/instance.h"

namespace lexmatch {

// strict_*: no agent is indifferent between two partners.
// weakly_ranked: all students induce one weak order over colleges and all
//   colleges induce one weak order over students.
// ranked: strict, and that common order is the index order on both sides
//   (s_0 and c_0 are the top-ranked agents).
// isometric: u(i, j) == v(j, i) everywhere.
struct Classification {
  bool strict_students = false;
  bool strict_colleges = false;
  bool ranked = false;
  bool weakly_ranked = false;
  bool isometric = false;

  std::string ToString() const;
};

Classification Classify(const Instance& instance);

// Inputs accepted by the FaSt family: ranked and isometric, or ranked with
// u(i, j) <= v(j, i) and every column of u non-increasing in i.
bool IsFastAdmissible(const Instance& instance);

}  // namespace lexmatch

#endif  // LEXMATCH_CLASSIFY_H_
