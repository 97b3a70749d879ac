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


#include "lexmatch/json_io.h"

#include <cstdint>
#include <utility>
#include <vector>

#include "lexmatch/error.h"
#include "lexmatch/hardness.h"

namespace lexmatch {
namespace {

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    Bad(std::string("missing field \"") + key + "\"");
  }
  return json.at(key);
}

Value ValueFromJson(const Json& json) {
  if (json.is_string()) return Value::Parse(json.get<std::string>());
  if (json.is_number_unsigned()) {
    return Value(static_cast<std::int64_t>(json.get<std::uint64_t>()));
  }
  if (json.is_number_integer()) Bad("negative value");
  Bad("values must be \"p\" or \"p/q\" strings");
}

ValueTable TableFromJson(const Json& json, const char* what) {
  if (!json.is_array()) Bad(std::string(what) + " must be an array of rows");
  ValueTable out;
  for (const Json& row : json) {
    if (!row.is_array()) Bad(std::string(what) + " rows must be arrays");
    std::vector<Value> r;
    r.reserve(row.size());
    for (const Json& x : row) r.push_back(ValueFromJson(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json TableToJson(const ValueTable& table) {
  Json out = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (const Value& x : row) r.push_back(x.ToString());
    out.push_back(std::move(r));
  }
  return out;
}

int IntFromJson(const Json& json, const char* what) {
  if (!json.is_number_integer()) Bad(std::string(what) + " must be an integer");
  const auto x = json.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) Bad(std::string(what) + " out of range");
  return static_cast<int>(x);
}

std::vector<std::int64_t> IntegersFromJson(const Json& json, const char* what) {
  if (!json.is_array()) Bad(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const Json& x : json) {
    if (!x.is_number_integer()) Bad(std::string(what) + " must hold integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

template <typename F>
auto Guard(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    Bad(e.what());
  }
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Bad(std::string("malformed JSON: ") + e.what());
  }
}

Instance InstanceFromJson(const Json& json) {
  return Guard([&] {
    ValueTable u;
    ValueTable v;
    if (json.is_object() && json.contains("values") &&
        !json.contains("student_values")) {
      u = TableFromJson(json.at("values"), "values");
      const std::size_t m = u.empty() ? 0 : u[0].size();
      v.assign(m, std::vector<Value>(u.size()));
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].size() != m) Bad("ragged values matrix");
        for (std::size_t j = 0; j < m; ++j) v[j][i] = u[i][j];
      }
    } else {
      u = TableFromJson(Field(json, "student_values"), "student_values");
      v = TableFromJson(Field(json, "college_values"), "college_values");
    }
    const int n = static_cast<int>(u.size());
    const int m = static_cast<int>(v.size());
    if (json.contains("n") && IntFromJson(json.at("n"), "n") != n) {
      Bad("n disagrees with student_values");
    }
    if (json.contains("m") && IntFromJson(json.at("m"), "m") != m) {
      Bad("m disagrees with college_values");
    }
    std::vector<int> caps(m, n);
    if (json.contains("capacities")) {
      const Json& c = json.at("capacities");
      if (!c.is_array()) Bad("capacities must be an array");
      caps.clear();
      for (const Json& x : c) caps.push_back(IntFromJson(x, "capacity"));
    }
    return Instance(std::move(u), std::move(v), std::move(caps));
  });
}

Json InstanceToJson(const Instance& instance) {
  return Json{{"n", instance.n()},
              {"m", instance.m()},
              {"student_values", TableToJson(instance.StudentTable())},
              {"college_values", TableToJson(instance.CollegeTable())},
              {"capacities", instance.capacities()}};
}

Matching MatchingFromJson(const Json& json, int num_colleges) {
  return Guard([&] {
    const Json& a = Field(json, "assignment");
    if (!a.is_array()) Bad("assignment must be an array");
    std::vector<int> assignment;
    for (const Json& x : a) {
      assignment.push_back(x.is_null() ? kUnmatched
                                       : IntFromJson(x, "assignment entry"));
    }
    return Matching(num_colleges, std::move(assignment));
  });
}

Json MatchingToJson(const Matching& matching) {
  Json a = Json::array();
  for (int c : matching.assignment()) {
    if (c == kUnmatched) {
      a.push_back(nullptr);
    } else {
      a.push_back(c);
    }
  }
  return Json{{"assignment", std::move(a)}};
}

Json LeximinToJson(const LeximinTuple& tuple) {
  Json out = Json::array();
  for (const Value& x : tuple.values()) out.push_back(x.ToString());
  return out;
}

Json ReportToJson(const SolverReport& report) {
  Json agents = Json::array();
  for (int t = 0; t < report.leximin.size(); ++t) {
    agents.push_back(report.leximin.agent_at(t).ToString());
  }
  Json out{{"algorithm", report.algorithm},
           {"assignment", MatchingToJson(report.matching)["assignment"]},
           {"leximin", LeximinToJson(report.leximin)},
           {"leximin_agents", std::move(agents)},
           {"steps", report.steps}};
  if (!report.boundary.empty()) out["boundary"] = report.boundary;
  if (report.reruns > 0) out["reruns"] = report.reruns;
  if (report.candidates > 0) out["candidates"] = report.candidates;
  return out;
}

Json FairnessToJson(const FairnessReport& report) {
  return Json{{"E_S", report.envy.students.ToString()},
              {"E_C", report.envy.colleges.ToString()},
              {"E_total", report.envy.total.ToString()},
              {"ef1_colleges", report.ef1_colleges},
              {"efx_colleges", report.efx_colleges},
              {"ef1_students", report.ef1_students},
              {"egalitarian", report.welfare.egalitarian.ToString()},
              {"nash", report.welfare.nash.ToString()},
              {"utilitarian", report.welfare.utilitarian.ToString()}};
}

Json ClassificationToJson(const Classification& flags) {
  return Json{{"strict_students", flags.strict_students},
              {"strict_colleges", flags.strict_colleges},
              {"ranked", flags.ranked},
              {"weakly_ranked", flags.weakly_ranked},
              {"isometric", flags.isometric}};
}

Json BlockingPairToJson(const std::optional<BlockingPair>& pair) {
  if (!pair.has_value()) return nullptr;
  return Json{{"student", pair->student},
              {"college", pair->college},
              {"displaced", pair->displaced}};
}

Instance ReductionFromJson(std::string_view kind, const Json& problem,
                           int replication) {
  return Guard([&] {
    if (kind != "bin-packing" && replication != 1) {
      Bad("--replicate applies to bin-packing only");
    }
    if (kind == "subset-sum") {
      const Json& b = Field(problem, "target");
      if (!b.is_number_integer()) Bad("target must be an integer");
      return SubsetSumToSmo(IntegersFromJson(Field(problem, "a"), "a"),
                            b.get<std::int64_t>());
    }
    if (kind == "partition") {
      return PartitionToSmo(IntegersFromJson(Field(problem, "p"), "p"));
    }
    if (kind == "3partition") {
      return ThreePartitionToSmo(IntegersFromJson(Field(problem, "p"), "p"));
    }
    if (kind == "bin-packing") {
      const Json& w = Field(problem, "weights");
      if (!w.is_array()) Bad("weights must be an array");
      std::vector<Value> weights;
      for (const Json& x : w) weights.push_back(ValueFromJson(x));
      BinPackingOptions options;
      options.replication = replication;
      if (problem.contains("epsilon")) {
        options.epsilon = ValueFromJson(problem.at("epsilon"));
      }
      return BinPackingToSmo(weights, IntFromJson(Field(problem, "bins"), "bins"),
                             options);
    }
    Bad("unknown reduction \"" + std::string(kind) + "\"");
  });
}

}  // namespace lexmatch
