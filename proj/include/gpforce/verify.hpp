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

#ifndef GPFORCE_VERIFY_HPP_
#define GPFORCE_VERIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpforce/forcing.hpp"
#include "gpforce/paper_tables.hpp"
#include "gpforce/polynomial.hpp"
#include "gpforce/report.hpp"

namespace gpforce {

using OrbitRows = std::vector<std::pair<int, int>>;  // sorted (PMC, FN)

struct VerifyOutcome {
  int n = 0;
  bool polynomial_ok = false;
  bool rows_ok = false;
  ForcingPolynomial expected_polynomial;
  ForcingPolynomial observed_polynomial;
  OrbitRows expected_rows;
  OrbitRows observed_rows;  // rotation orbits
  // Filled only when rotation orbits disagree with the expected rows.
  std::optional<OrbitRows> dihedral_rows;
  std::vector<std::string> diffs;

  bool pass() const { return polynomial_ok && rows_ok; }
};

// Recomputes GP(expected.n, 2) and diffs it against the expected table.
VerifyOutcome verify_table(const PaperTable& expected, Method method,
                           int threads);

// Multiset difference rendered as "(PMC,FN) x count" items.
std::vector<std::string> diff_rows(const OrbitRows& expected,
                                   const OrbitRows& observed);

Json verify_outcome_json(const VerifyOutcome& outcome);

}  // namespace gpforce

#endif  // GPFORCE_VERIFY_HPP_
