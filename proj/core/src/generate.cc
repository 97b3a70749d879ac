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


#include "lexmatch/generate.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lexmatch/error.h"

namespace lexmatch {
namespace {

using Rng = std::mt19937_64;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

std::int64_t Uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// `count` distinct integers from [1, hi] in random order.
std::vector<std::int64_t> Distinct(Rng& rng, std::int64_t count,
                                   std::int64_t hi) {
  if (count > hi) Bad("value range too small for distinct values");
  std::vector<std::int64_t> out;
  out.reserve(count);
  if (hi <= 4 * count) {
    std::vector<std::int64_t> pool(hi);
    std::iota(pool.begin(), pool.end(), 1);
    for (std::int64_t t = 0; t < count; ++t) {
      std::swap(pool[t], pool[Uniform(rng, t, hi - 1)]);
      out.push_back(pool[t]);
    }
    return out;
  }
  std::vector<std::int64_t> seen;
  while (static_cast<std::int64_t>(out.size()) < count) {
    const std::int64_t x = Uniform(rng, 1, hi);
    auto it = std::lower_bound(seen.begin(), seen.end(), x);
    if (it != seen.end() && *it == x) continue;
    seen.insert(it, x);
    out.push_back(x);
  }
  return out;
}

ValueTable Transpose(const ValueTable& t) {
  ValueTable out(t.empty() ? 0 : t[0].size(), std::vector<Value>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) out[j][i] = t[i][j];
  }
  return out;
}

ValueTable SortedRows(Rng& rng, int rows, int cols, std::int64_t hi) {
  ValueTable out(rows);
  for (auto& row : out) {
    std::vector<std::int64_t> xs = Distinct(rng, cols, hi);
    std::sort(xs.begin(), xs.end(), std::greater<>());
    for (std::int64_t x : xs) row.emplace_back(x);
  }
  return out;
}

ValueTable ShuffledRows(Rng& rng, int rows, int cols, std::int64_t hi) {
  ValueTable out(rows);
  for (auto& row : out) {
    for (std::int64_t x : Distinct(rng, cols, hi)) row.emplace_back(x);
  }
  return out;
}

ValueTable RankedIsometric(Rng& rng, int n, int m, std::int64_t hi) {
  const std::vector<std::int64_t> pool =
      Distinct(rng, static_cast<std::int64_t>(n) * m, hi);
  std::vector<std::vector<std::int64_t>> x(n);
  for (int i = 0; i < n; ++i) {
    x[i].assign(pool.begin() + static_cast<std::ptrdiff_t>(i) * m,
                pool.begin() + static_cast<std::ptrdiff_t>(i + 1) * m);
    std::sort(x[i].begin(), x[i].end(), std::greater<>());
  }
  // Sorting columns keeps the rows sorted.
  std::vector<std::int64_t> col(n);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) col[i] = x[i][j];
    std::sort(col.begin(), col.end(), std::greater<>());
    for (int i = 0; i < n; ++i) x[i][j] = col[i];
  }
  ValueTable out(n);
  for (int i = 0; i < n; ++i) {
    for (std::int64_t y : x[i]) out[i].emplace_back(y);
  }
  return out;
}

// V_ij = a_i + b_j with non-increasing a and b and at least one tie.
ValueTable WeakRankedIsometric(Rng& rng, int n, int m, std::int64_t hi) {
  if (n < 2 && m < 2) Bad("a tie needs n >= 2 or m >= 2");
  std::vector<std::int64_t> a(n);
  std::vector<std::int64_t> b(m);
  for (auto& x : a) x = Uniform(rng, 0, hi);
  for (auto& x : b) x = Uniform(rng, 1, hi);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  if (n >= 2) {
    a[1] = a[0];
  } else {
    b[1] = b[0];
  }
  ValueTable out(n, std::vector<Value>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) out[i][j] = Value(a[i] + b[j]);
  }
  return out;
}

std::vector<int> Capacities(Rng& rng, const GenSpec& spec) {
  switch (spec.capacity_mode) {
    case CapacityMode::kNone:
      return std::vector<int>(spec.m, spec.n);
    case CapacityMode::kUniform:
      return std::vector<int>(spec.m, spec.uniform_capacity);
    case CapacityMode::kRandom:
      break;
  }
  std::vector<int> caps(spec.m);
  do {
    for (int& b : caps) b = static_cast<int>(Uniform(rng, 1, spec.n));
  } while (std::accumulate(caps.begin(), caps.end(), 0) < spec.n);
  return caps;
}

std::int64_t DefaultHi(const GenSpec& s) {
  const std::int64_t big = std::max(s.n, s.m);
  switch (s.kind) {
    case GenKind::kRankedIsometric:
      return 3 * static_cast<std::int64_t>(s.n) * s.m;
    case GenKind::kWeak:
      return std::max<std::int64_t>(2, big / 2);
    default:
      return 3 * big;
  }
}

}  // namespace

Instance Generate(const GenSpec& spec) {
  if (spec.m < 1 || spec.n < spec.m) Bad("generator needs n >= m >= 1");
  const std::int64_t hi = spec.hi > 0 ? spec.hi : DefaultHi(spec);
  Rng rng(spec.seed);
  ValueTable u;
  ValueTable v;
  switch (spec.kind) {
    case GenKind::kRankedIsometric:
      u = RankedIsometric(rng, spec.n, spec.m, hi);
      v = Transpose(u);
      break;
    case GenKind::kRanked:
      u = SortedRows(rng, spec.n, spec.m, hi);
      v = SortedRows(rng, spec.m, spec.n, hi);
      break;
    case GenKind::kStrict:
      u = ShuffledRows(rng, spec.n, spec.m, hi);
      v = ShuffledRows(rng, spec.m, spec.n, hi);
      break;
    case GenKind::kWeak:
      if (spec.n < 2 && spec.m < 2) Bad("a tie needs n >= 2 or m >= 2");
      u.assign(spec.n, std::vector<Value>(spec.m));
      v.assign(spec.m, std::vector<Value>(spec.n));
      for (auto& row : u) {
        for (Value& x : row) x = Value(Uniform(rng, 1, hi));
      }
      for (auto& row : v) {
        for (Value& x : row) x = Value(Uniform(rng, 1, hi));
      }
      if (spec.m >= 2) {
        u[0][1] = u[0][0];
      } else {
        v[0][1] = v[0][0];
      }
      break;
    case GenKind::kWeakRankedIsometric:
      u = WeakRankedIsometric(rng, spec.n, spec.m, hi);
      v = Transpose(u);
      break;
  }
  return Instance(std::move(u), std::move(v), Capacities(rng, spec));
}

GenKind ParseGenKind(std::string_view name) {
  for (GenKind k : {GenKind::kRankedIsometric, GenKind::kRanked,
                    GenKind::kStrict, GenKind::kWeak,
                    GenKind::kWeakRankedIsometric}) {
    if (GenKindName(k) == name) return k;
  }
  Bad("unknown instance kind \"" + std::string(name) + "\"");
}

std::string_view GenKindName(GenKind kind) {
  switch (kind) {
    case GenKind::kRankedIsometric:
      return "ranked_isometric";
    case GenKind::kRanked:
      return "ranked";
    case GenKind::kStrict:
      return "strict";
    case GenKind::kWeak:
      return "weak";
    case GenKind::kWeakRankedIsometric:
      return "weak_ranked_isometric";
  }
  return "?";
}

CapacityMode ParseCapacityMode(std::string_view name) {
  if (name == "none") return CapacityMode::kNone;
  if (name == "uniform") return CapacityMode::kUniform;
  if (name == "random") return CapacityMode::kRandom;
  Bad("unknown capacity mode \"" + std::string(name) + "\"");
}

}  // namespace lexmatch
