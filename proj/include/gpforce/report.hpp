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

#ifndef GPFORCE_REPORT_HPP_
#define GPFORCE_REPORT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpforce/forcing.hpp"
#include "gpforce/graph.hpp"
#include "gpforce/orbits.hpp"
#include "gpforce/polynomial.hpp"
#include "json.hpp"

namespace gpforce {

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson, kCsv, kDot };

// Graph "GP(n,k)" label, or "G(V,E)" for general graphs.
std::string graph_label(const Graph& g);

// {n, k, vertices, edges: [[a, b], ...]} in canonical edge order.
Json graph_to_json(const Graph& g);
// One "a -- b;" line per edge, in canonical order.
std::string graph_to_dot(const Graph& g);

Json edge_indices_json(const EdgeSet& s);

// {matching, forcing_number, witness, packing_size, n_alt_cycles}
Json matching_record_json(const MatchingAnalysis& record);

Json cycle_json(const Graph& g, const AltCycle& cycle);
// Vertex names separated by spaces, e.g. "u0 u2 v2 v3 u3 u1 v1 v0".
std::string cycle_to_text(const Graph& g, const AltCycle& cycle);

// {"2": 9, "3": 8}, exponents ascending.
Json polynomial_json(const ForcingPolynomial& p);
Json stats_json(const PolyStats& s);

struct OrbitRow {
  int no = 0;
  int pmc = 0;
  int fn = 0;
  Matching representative;
};

// Rows numbered from 1 in the (already sorted) orbit order.
std::vector<OrbitRow> orbit_table(std::span<const Orbit> orbits);

std::string orbit_table_text(const Graph& g, std::span<const OrbitRow> rows,
                             const ForcingPolynomial& p);
std::string orbit_table_csv(const Graph& g, std::span<const OrbitRow> rows);

// {n, k, polynomial, stats, orbits: [{representative_edges, pmc, fn}]}
Json poly_report_json(const Graph& g, const ForcingPolynomial& p,
                      std::span<const OrbitRow> rows);

// Dump used for every JSON output: two-space indent and a trailing newline.
std::string render_json(const Json& j);

}  // namespace gpforce

#endif  // GPFORCE_REPORT_HPP_
