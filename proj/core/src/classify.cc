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

#include "lexmatch/classify.h"

#include <algorithm>
#include <numeric>
#include <vector>

namespace lexmatch {
namespace {

int Sign(const Value& a, const Value& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

const Value& At(const Instance& in, bool students, int r, int c) {
  return students ? in.u(r, c) : in.v(r, c);
}

bool StrictRows(const Instance& in, bool students) {
  const int rows = students ? in.n() : in.m();
  const int cols = students ? in.m() : in.n();
  std::vector<int> order(cols);
  for (int r = 0; r < rows; ++r) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return At(in, students, r, a) < At(in, students, r, b);
    });
    for (int t = 0; t + 1 < cols; ++t) {
      if (At(in, students, r, order[t]) == At(in, students, r, order[t + 1])) {
        return false;
      }
    }
  }
  return true;
}

// Every row induces the same weak order over the columns. Comparing
// neighbours in the first row's order is enough by transitivity.
bool CommonWeakOrder(const Instance& in, bool students) {
  const int rows = students ? in.n() : in.m();
  const int cols = students ? in.m() : in.n();
  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return At(in, students, 0, a) < At(in, students, 0, b);
  });
  for (int t = 0; t + 1 < cols; ++t) {
    const int a = order[t];
    const int b = order[t + 1];
    const int ref = Sign(At(in, students, 0, a), At(in, students, 0, b));
    for (int r = 1; r < rows; ++r) {
      if (Sign(At(in, students, r, a), At(in, students, r, b)) != ref) {
        return false;
      }
    }
  }
  return true;
}

bool DecreasingInIndex(const Instance& in, bool students) {
  const int rows = students ? in.n() : in.m();
  const int cols = students ? in.m() : in.n();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      const Value& x = students ? in.u(r, c) : in.v(r, c);
      const Value& y = students ? in.u(r, c + 1) : in.v(r, c + 1);
      if (!(y < x)) return false;
    }
  }
  return true;
}

}  // namespace

std::string Classification::ToString() const {
  std::string out;
  auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(strict_students, "strict_students");
  add(strict_colleges, "strict_colleges");
  add(ranked, "ranked");
  add(weakly_ranked, "weakly_ranked");
  add(isometric, "isometric");
  return out.empty() ? "none" : out;
}

Classification Classify(const Instance& instance) {
  Classification c;
  c.strict_students = StrictRows(instance, true);
  c.strict_colleges = StrictRows(instance, false);
  c.weakly_ranked =
      CommonWeakOrder(instance, true) && CommonWeakOrder(instance, false);
  c.ranked = DecreasingInIndex(instance, true) &&
             DecreasingInIndex(instance, false);
  c.isometric = true;
  for (int i = 0; i < instance.n() && c.isometric; ++i) {
    for (int j = 0; j < instance.m(); ++j) {
      if (instance.u(i, j) != instance.v(j, i)) {
        c.isometric = false;
        break;
      }
    }
  }
  return c;
}

bool IsFastAdmissible(const Instance& instance) {
  const Classification c = Classify(instance);
  if (!c.ranked) return false;
  if (c.isometric) return true;
  for (int j = 0; j < instance.m(); ++j) {
    for (int i = 0; i < instance.n(); ++i) {
      if (instance.v(j, i) < instance.u(i, j)) return false;
      if (i + 1 < instance.n() && instance.u(i, j) < instance.u(i + 1, j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace lexmatch
