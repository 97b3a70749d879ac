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

#ifndef LEXMATCH_VALUE_H_
#define LEXMATCH_VALUE_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lexmatch {

// Exact non-negative rational. Construction and subtraction reject negative
// results, so every Value in the library is >= 0.
class Value {
 public:
  Value() = default;
  Value(std::int64_t numerator);  // NOLINT: implicit for terse literals.
  Value(std::int64_t numerator, std::int64_t denominator);
  explicit Value(const mpq_class& q);

  // Accepts "17", "3/4" and "-0". Surrounding whitespace is not allowed.
  static Value Parse(std::string_view text);

  // Canonical form: "p" for integers, "p/q" in lowest terms otherwise.
  std::string ToString() const;

  const mpq_class& rational() const { return q_; }
  bool IsZero() const { return sgn(q_) == 0; }
  double ToDouble() const { return q_.get_d(); }

  Value& operator+=(const Value& other);
  Value& operator-=(const Value& other);
  Value& operator*=(const Value& other);
  Value& operator/=(const Value& other);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator/(Value a, const Value& b) { return a /= b; }

  friend bool operator==(const Value& a, const Value& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void CheckNonNegative() const;

  mpq_class q_;
};

// max(0, a - b).
Value PositivePart(const Value& a, const Value& b);

std::ostream& operator<<(std::ostream& os, const Value& value);

}  // namespace lexmatch

#endif  // LEXMATCH_VALUE_H_
