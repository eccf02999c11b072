// Copyright 2026 The gpforce Authors
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

#include "gpforce/paper_tables.hpp"

#include <algorithm>

namespace gpforce {

std::span<const PaperTable> paper_tables() {
  static const std::vector<PaperTable> kTables = {
      {5, {{2, 6}}, {{5, 2}, {1, 2}}},
      {6, {{2, 10}}, {{6, 2}, {1, 2}, {3, 2}}},
      {7, {{2, 15}}, {{7, 2}, {1, 2}, {7, 2}}},
      {8, {{3, 8}, {2, 9}}, {{4, 3}, {8, 2}, {1, 2}, {4, 3}}},
      {9, {{3, 1}, {2, 21}}, {{9, 2}, {9, 2}, {1, 3}, {3, 2}}},
      {10, {{3, 36}}, {{10, 3}, {5, 3}, {10, 3}, {1, 3}, {10, 3}}},
      {11, {{3, 34}, {2, 11}}, {{11, 3}, {11, 3}, {11, 3}, {1, 3}, {11, 2}}},
      {12,
       {{3, 51}, {2, 3}},
       {{4, 3}, {12, 3}, {12, 3}, {6, 3}, {12, 3}, {1, 3}, {4, 3}, {3, 2}}},
      {13,
       {{4, 1}, {3, 78}},
       {{13, 3}, {13, 3}, {13, 3}, {13, 3}, {13, 3}, {1, 4}, {13, 3}}},
      {14,
       {{4, 57}, {3, 56}},
       {{14, 4}, {14, 4}, {14, 3}, {14, 3}, {14, 4}, {7, 3}, {14, 4}, {1, 4},
        {14, 3}, {7, 3}}},
      {15,
       {{4, 91}, {3, 53}},
       {{15, 4}, {15, 4}, {15, 4}, {5, 3}, {15, 3}, {15, 3}, {15, 4}, {15, 4},
        {15, 4}, {1, 4}, {15, 3}, {3, 3}}},
  };
  return kTables;
}

const PaperTable* find_paper_table(int n) {
  const auto tables = paper_tables();
  const auto it = std::find_if(tables.begin(), tables.end(),
                               [n](const PaperTable& t) { return t.n == n; });
  return it == tables.end() ? nullptr : &*it;
}

}  // namespace gpforce
