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


// JSON wire format. Indices are 0-based; values are "p" or "p/q" strings.
//
//   instance: {"n": 4, "m": 2, "student_values": [["100", "10"], ...],
//              "college_values": [["100", "99", "20", "19"], ...],
//              "capacities": [3, 3]}
//   matching: {"assignment": [0, 0, 1, null]}

#ifndef LEXMATCH_JSON_IO_H_
#define LEXMATCH_JSON_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lexmatch/classify.h"
#include "lexmatch/fairness.h"
#include "lexmatch/instance.h"
#include "lexmatch/leximin.h"
#include "lexmatch/matching.h"
#include "lexmatch/report.h"
#include "lexmatch/stability.h"

namespace lexmatch {

using Json = nlohmann::json;

// "capacities" may be omitted, meaning b_j = n. A single "values" matrix may
// replace the two tables for isometric input.
Instance InstanceFromJson(const Json& json);
Json InstanceToJson(const Instance& instance);

Matching MatchingFromJson(const Json& json, int num_colleges);
Json MatchingToJson(const Matching& matching);

Json LeximinToJson(const LeximinTuple& tuple);
Json ReportToJson(const SolverReport& report);
Json FairnessToJson(const FairnessReport& report);
Json ClassificationToJson(const Classification& flags);
Json BlockingPairToJson(const std::optional<BlockingPair>& pair);

// Source problems for the reductions:
//   subset-sum:   {"a": [1, 2], "target": 3}
//   partition:    {"p": [1, 1, 2, 2]}
//   3partition:   {"p": [...]}
//   bin-packing:  {"weights": ["3/5", "3/5"], "bins": 2, "epsilon": "1/100"}
Instance ReductionFromJson(std::string_view kind, const Json& problem,
                           int replication = 1);

// Parse helpers that map every syntax or shape problem to
// Error(kInvalidInput).
Json ParseJson(std::string_view text);

}  // namespace lexmatch

#endif  // LEXMATCH_JSON_IO_H_
