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

#include "lexmatch/value.h"

#include <cctype>
#include <string>

#include "lexmatch/error.h"

namespace lexmatch {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "INVALID_INPUT";
    case ErrorCode::kPrecondition:
      return "PRECONDITION";
    case ErrorCode::kNotRanked:
      return "NOT_RANKED";
    case ErrorCode::kNotAdmissible:
      return "NOT_ADMISSIBLE";
    case ErrorCode::kNonStrict:
      return "NON_STRICT";
    case ErrorCode::kNpHardRegime:
      return "NP_HARD_REGIME";
    case ErrorCode::kInfeasible:
      return "INFEASIBLE";
    case ErrorCode::kBudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Value::Value(std::int64_t numerator) : q_(static_cast<long>(numerator)) {
  CheckNonNegative();
}

Value::Value(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidInput, "zero denominator");
  }
  q_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                 mpz_class(static_cast<long>(denominator)));
  q_.canonicalize();
  CheckNonNegative();
}

Value::Value(const mpq_class& q) : q_(q) {
  q_.canonicalize();
  CheckNonNegative();
}

Value Value::Parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!IsDigits(num) || !IsDigits(den)) {
    throw Error(ErrorCode::kInvalidInput,
                "malformed value '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  mpq_class r(p, q);
  r.canonicalize();
  if (sgn(r) < 0) {
    throw Error(ErrorCode::kInvalidInput,
                "negative value '" + std::string(text) + "'");
  }
  return Value(r);
}

std::string Value::ToString() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

void Value::CheckNonNegative() const {
  if (sgn(q_) < 0) {
    throw Error(ErrorCode::kInvalidInput, "values must be non-negative");
  }
}

Value& Value::operator+=(const Value& other) {
  q_ += other.q_;
  return *this;
}

Value& Value::operator-=(const Value& other) {
  q_ -= other.q_;
  if (sgn(q_) < 0) {
    throw Error(ErrorCode::kPrecondition, "subtraction below zero");
  }
  return *this;
}

Value& Value::operator*=(const Value& other) {
  q_ *= other.q_;
  return *this;
}

Value& Value::operator/=(const Value& other) {
  if (other.IsZero()) {
    throw Error(ErrorCode::kPrecondition, "division by zero");
  }
  q_ /= other.q_;
  return *this;
}

Value PositivePart(const Value& a, const Value& b) {
  if (a <= b) return Value();
  return a - b;
}

std::ostream& operator<<(std::ostream& os, const Value& value) {
  return os << value.ToString();
}

}  // namespace lexmatch
