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

#include "gpforce/verify.hpp"

#include <algorithm>
#include <map>

#include "gpforce/graph.hpp"
#include "gpforce/orbits.hpp"

namespace gpforce {
namespace {

std::string rows_to_text(const OrbitRows& rows) {
  std::string out = "{";
  for (const auto& [pmc, fn] : rows) {
    if (out.size() > 1) out += ',';
    out += "(" + std::to_string(pmc) + "," + std::to_string(fn) + ")";
  }
  return out + "}";
}

Json rows_json(const OrbitRows& rows) {
  Json out = Json::array();
  for (const auto& [pmc, fn] : rows) out.push_back(Json::array({pmc, fn}));
  return out;
}

}  // namespace

std::vector<std::string> diff_rows(const OrbitRows& expected,
                                   const OrbitRows& observed) {
  std::map<std::pair<int, int>, int> balance;
  for (const auto& row : expected) ++balance[row];
  for (const auto& row : observed) --balance[row];
  std::vector<std::string> out;
  for (const auto& [row, count] : balance) {
    if (count == 0) continue;
    out.push_back(std::string(count > 0 ? "missing" : "unexpected") + " row (" +
                  std::to_string(row.first) + "," + std::to_string(row.second) +
                  ") x" + std::to_string(count > 0 ? count : -count));
  }
  return out;
}

VerifyOutcome verify_table(const PaperTable& expected, Method method,
                           int threads) {
  VerifyOutcome out;
  out.n = expected.n;
  out.expected_polynomial = ForcingPolynomial(expected.polynomial);
  out.expected_rows = expected.rows;
  std::sort(out.expected_rows.begin(), out.expected_rows.end());

  const Graph g = build_gp(expected.n, 2);
  const MatchingSet matchings = enumerate_perfect_matchings(g);
  const auto results = forcing_results(g, matchings, method, threads);
  out.observed_polynomial = polynomial_from_results(results);
  const auto orbits =
      matching_orbits(g, matchings, results, OrbitGroup::kRotation);
  out.observed_rows = orbit_signature(orbits);

  out.polynomial_ok = out.observed_polynomial == out.expected_polynomial;
  out.rows_ok = out.observed_rows == out.expected_rows;
  if (!out.polynomial_ok) {
    out.diffs.push_back("polynomial: expected " +
                        out.expected_polynomial.to_string() + ", got " +
                        out.observed_polynomial.to_string());
  }
  if (!out.rows_ok) {
    for (auto& d : diff_rows(out.expected_rows, out.observed_rows)) {
      out.diffs.push_back("rotation orbits: " + d);
    }
    out.dihedral_rows = orbit_signature(
        matching_orbits(g, matchings, results, OrbitGroup::kDihedral));
    out.diffs.push_back(
        "dihedral orbits: " + rows_to_text(*out.dihedral_rows) +
        (*out.dihedral_rows == out.expected_rows ? " (match expected rows)"
                                                 : " (also differ)"));
  }
  return out;
}

Json verify_outcome_json(const VerifyOutcome& outcome) {
  Json j;
  j["n"] = outcome.n;
  j["pass"] = outcome.pass();
  j["expected_polynomial"] = outcome.expected_polynomial.to_string();
  j["observed_polynomial"] = outcome.observed_polynomial.to_string();
  j["expected_rows"] = rows_json(outcome.expected_rows);
  j["observed_rows"] = rows_json(outcome.observed_rows);
  j["dihedral_rows"] =
      outcome.dihedral_rows ? rows_json(*outcome.dihedral_rows) : Json(nullptr);
  j["diffs"] = outcome.diffs;
  return j;
}

}  // namespace gpforce
