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

#ifndef LEXMATCH_FAST_CONST_H_
#define LEXMATCH_FAST_CONST_H_

#include "lexmatch/instance.h"
#include "lexmatch/matching.h"
#include "lexmatch/report.h"

namespace lexmatch {

// Closed-form stability test for two colleges under strict preferences.
// With A_j the students whose favourite is c_j, mu(c_j) must consist of the
// k_j members of A_j that c_j likes best plus the l_j members of the other
// group that c_{-j} likes least, and when l_j > 0 the best member of A_j
// outside c_j must rank below c_j's worst outsider.
//
// Errors: kPrecondition if m != 2 or a student is unmatched, kNonStrict.
bool IsStableM2(const Instance& instance, const Matching& matching);

// Leximin-optimal stable matching for m = 2 and strict preferences. Starts
// from every student at their favourite and moves the weakest member of the
// richer college across, one student at a time, until a forbidden pair is
// reached; the best matching seen is returned (earlier wins on ties).
// Capacities must be n (never binding); every student is matched.
//
// Errors: kPrecondition if m != 2, kNonStrict, kNotAdmissible.
SolverReport FastConst(const Instance& instance);

}  // namespace lexmatch

#endif  // LEXMATCH_FAST_CONST_H_
