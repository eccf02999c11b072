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

#ifndef GPFORCE_PAPER_TABLES_HPP_
#define GPFORCE_PAPER_TABLES_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gpforce {

// Published forcing polynomial and (PMC, FN) rows of GP(n,2). Rows keep the
// published order; only their multiset is compared.
struct PaperTable {
  int n = 0;
  std::map<int, std::int64_t> polynomial;
  std::vector<std::pair<int, int>> rows;  // (orbit size, forcing number)
};

// GP(n,2) for n = 5..15, ascending n.
std::span<const PaperTable> paper_tables();

const PaperTable* find_paper_table(int n);

}  // namespace gpforce

#endif  // GPFORCE_PAPER_TABLES_HPP_
