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


#include "lexmatch/hardness.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "lexmatch/classify.h"
#include "lexmatch/error.h"

namespace lexmatch {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidInput, what);
}

void Verify(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("reduction check failed: ") + what);
}

std::int64_t Sum(const std::vector<std::int64_t>& xs) {
  return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

Instance EqualRows(const std::vector<std::int64_t>& p, int m) {
  for (std::int64_t x : p) Require(x >= 0, "negative integer in partition input");
  const int n = static_cast<int>(p.size());
  ValueTable matrix(n, std::vector<Value>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) matrix[i][j] = Value(p[i]);
  }
  Instance out = Instance::Isometric(matrix, SurplusCapacities(n, m));
  Verify(Classify(out).weakly_ranked && Classify(out).isometric,
         "partition image must be weakly ranked and isometric");
  return out;
}

}  // namespace

Instance SubsetSumToSmo(const std::vector<std::int64_t>& a,
                        std::int64_t target) {
  const int k = static_cast<int>(a.size());
  Require(k >= 1, "subset sum needs at least one integer");
  Require(std::set<std::int64_t>(a.begin(), a.end()).size() == a.size(),
          "subset sum integers must be distinct");
  for (std::int64_t x : a) Require(x >= 1, "subset sum integers must be positive");
  Require(*std::max_element(a.begin(), a.end()) < target,
          "subset sum needs max(a) < B");
  Require(target <= Sum(a), "subset sum needs B <= sum(a)");

  const int m = k + 1;
  const int n = 2 * k;
  const Value eps(1, 3 * static_cast<std::int64_t>(k) * k);
  const Value b(target);
  const int last = m - 1;
  ValueTable u(n, std::vector<Value>(m));
  ValueTable v(m, std::vector<Value>(n));
  // Loops run over 1-based ranks so that the tie-breaking terms j * eps and
  // i * eps never vanish.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      Value x = Value(j) * eps;
      if (i <= k && j == i) {
        x = b;
      } else if (i <= k && j == m) {
        x = b - Value(a[i - 1]) + eps;
      } else if (i > k && j == i - k) {
        x = b;
      }
      u[i - 1][j - 1] = x;
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= n; ++i) {
      Value x = Value(i) * eps;
      if (j <= k && i == j + k) {
        x = b + b;
      } else if (j <= k && i == j) {
        x = b;
      } else if (j == m && i <= k) {
        x = Value(a[i - 1]);
      }
      v[j - 1][i - 1] = x;
    }
  }
  Instance out(std::move(u), std::move(v), SurplusCapacities(n, m));

  Verify(Value(n) * eps < Value(1), "j eps < 1");
  for (int i = 0; i < k; ++i) {
    Verify(Value(1) < out.u(i, last), "1 < B - a_i + eps");
    Verify(out.u(i, last) < b, "B - a_i + eps < B");
  }
  const Classification c = Classify(out);
  Verify(c.strict_students && c.strict_colleges, "strict preferences");
  return out;
}

std::int64_t PartitionTarget(const std::vector<std::int64_t>& p, int parts) {
  Require(parts >= 1, "partition needs at least one part");
  const std::int64_t total = Sum(p);
  Require(total % parts == 0, "sum is not divisible by the number of parts");
  return total / parts;
}

Instance PartitionToSmo(const std::vector<std::int64_t>& p) {
  Require(p.size() >= 2, "partition needs at least two integers");
  PartitionTarget(p, 2);
  return EqualRows(p, 2);
}

Instance ThreePartitionToSmo(const std::vector<std::int64_t>& p) {
  Require(!p.empty() && p.size() % 3 == 0,
          "3-partition needs a multiple of three integers");
  const int m = static_cast<int>(p.size()) / 3;
  PartitionTarget(p, m);
  return EqualRows(p, m);
}

Instance BinPackingToSmo(const std::vector<Value>& weights, int bins,
                         const BinPackingOptions& options) {
  const int l = static_cast<int>(weights.size());
  const int t = options.replication;
  Require(bins >= 2, "bin packing needs at least two bins");
  Require(l >= bins, "bin packing needs at least as many items as bins");
  Require(t >= 1, "replication must be at least 1");
  mpz_class denom = 1;
  for (const Value& w : weights) {
    Require(w <= Value(1), "item weight above 1");
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
            w.rational().get_den_mpz_t());
  }

  const int n = t * l + 1;
  const int m = t * bins + 1;
  const Value resolution(mpq_class(1, denom));
  Value eps;
  if (options.epsilon.has_value()) {
    eps = *options.epsilon;
  } else {
    eps = std::min(Value(1, 4 * static_cast<std::int64_t>(n) * n),
                   resolution / Value(2));
  }
  Require(!eps.IsZero(), "epsilon must be positive");
  // Any overfull bin exceeds 1 by at least the weight resolution.
  Require(eps < resolution, "epsilon must be below the weight resolution");

  const int dummy_student = n - 1;
  const int dummy_college = m - 1;
  ValueTable u(n, std::vector<Value>(m));
  ValueTable v(m, std::vector<Value>(n));
  const Value top(t + 1);
  for (int p = 0; p < t; ++p) {
    for (int i = 0; i < l; ++i) {
      const int s = p * l + i;
      for (int q = 0; q < t; ++q) {
        for (int j = 0; j < bins; ++j) {
          const int c = q * bins + j;
          // Items value bins of their own or an earlier copy, and bins
          // value items of their own or an earlier copy.
          if (p >= q) u[s][c] = Value(1) - weights[i] + eps;
          if (q >= p) v[c][s] = weights[i];
        }
      }
      u[s][dummy_college] = top;
    }
  }
  u[dummy_student][dummy_college] = Value(1);
  const Value dummy_value = t == 1 ? Value(n) : Value(t + 1) * Value(n);
  for (int s = 0; s < n; ++s) v[dummy_college][s] = dummy_value;
  Instance out(std::move(u), std::move(v), SurplusCapacities(n, m));

  for (int s = 0; s + 1 < n; ++s) {
    Verify(out.u(s, 0) < out.u(s, dummy_college), "items prefer the dummy");
  }
  return out;
}

}  // namespace lexmatch
