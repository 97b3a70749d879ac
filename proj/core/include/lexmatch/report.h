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

#ifndef LEXMATCH_REPORT_H_
#define LEXMATCH_REPORT_H_

#include <cstdint>
#include <string>

#include "lexmatch/leximin.h"
#include "lexmatch/matching.h"
#include "lexmatch/ranked.h"

namespace lexmatch {

struct SolverReport {
  std::string algorithm;
  Matching matching;
  LeximinTuple leximin;
  // Empty unless the solver works on boundary vectors.
  BoundaryVector boundary;
  // Elementary work units; deterministic for a fixed input.
  std::int64_t steps = 0;
  // Outer reruns of the capacitated greedy loop.
  std::int64_t reruns = 0;
  // Candidate matchings examined by the exhaustive search.
  std::int64_t candidates = 0;
};

}  // namespace lexmatch

#endif  // LEXMATCH_REPORT_H_
