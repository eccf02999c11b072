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

#include "gpforce/report.hpp"

#include <sstream>

namespace gpforce {

std::string graph_label(const Graph& g) {
  if (const auto& gp = g.gp_params()) {
    return "GP(" + std::to_string(gp->n) + "," + std::to_string(gp->k) + ")";
  }
  return "G(" + std::to_string(g.num_vertices()) + "," +
         std::to_string(g.num_edges()) + ")";
}

Json graph_to_json(const Graph& g) {
  Json j;
  if (const auto& gp = g.gp_params()) {
    j["n"] = gp->n;
    j["k"] = gp->k;
  } else {
    j["n"] = nullptr;
    j["k"] = nullptr;
  }
  Json vertices = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.vertex_name(v));
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_dot(const Graph& g) {
  std::string name;
  for (char c : graph_label(g)) {
    if (c == '(' || c == ',') {
      name += '_';
    } else if (c != ')') {
      name += c;
    }
  }
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const Edge& e : g.edges()) {
    out << "  " << g.vertex_name(e.a) << " -- " << g.vertex_name(e.b) << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json edge_indices_json(const EdgeSet& s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(e); });
  return out;
}

Json matching_record_json(const MatchingAnalysis& record) {
  Json j;
  j["matching"] = edge_indices_json(record.matching);
  j["forcing_number"] = record.forcing.forcing_number;
  j["witness"] = edge_indices_json(record.forcing.witness);
  j["packing_size"] = record.packing_size;
  j["n_alt_cycles"] = record.n_alt_cycles;
  return j;
}

std::string cycle_to_text(const Graph& g, const AltCycle& cycle) {
  std::string out;
  for (int v : cycle.vertices) {
    if (!out.empty()) out += ' ';
    out += g.vertex_name(v);
  }
  return out;
}

Json cycle_json(const Graph& g, const AltCycle& cycle) {
  Json vertices = Json::array();
  for (int v : cycle.vertices) vertices.push_back(g.vertex_name(v));
  Json j;
  j["vertices"] = std::move(vertices);
  j["matched_edges"] = edge_indices_json(cycle.matched_edges);
  return j;
}

Json polynomial_json(const ForcingPolynomial& p) {
  Json j = Json::object();
  for (const auto& [exponent, count] : p.coefficients()) {
    j[std::to_string(exponent)] = count;
  }
  return j;
}

Json stats_json(const PolyStats& s) {
  Json j;
  j["pm_count"] = s.pm_count;
  j["average_forcing"] = s.average_forcing.to_string();
  j["average_forcing_decimal"] = s.average_forcing.to_decimal(6);
  j["spectrum"] = s.spectrum;
  j["min_forcing"] = s.min_forcing;
  j["max_forcing"] = s.max_forcing;
  return j;
}

std::vector<OrbitRow> orbit_table(std::span<const Orbit> orbits) {
  std::vector<OrbitRow> rows;
  rows.reserve(orbits.size());
  int no = 0;
  for (const Orbit& o : orbits) {
    rows.push_back({++no, o.size, o.forcing_number, o.representative});
  }
  return rows;
}

std::string orbit_table_text(const Graph& g, std::span<const OrbitRow> rows,
                             const ForcingPolynomial& p) {
  std::ostringstream out;
  out << "NO\tPMC\tFN\tREPRESENTATIVE\n";
  for (const OrbitRow& r : rows) {
    out << r.no << '\t' << r.pmc << '\t' << r.fn << '\t'
        << edge_set_to_text(g, r.representative) << '\n';
  }
  const int n = g.gp_params() ? g.gp_params()->n : g.num_vertices() / 2;
  out << "FP-" << n << '\t' << p.to_string() << '\n';
  return out.str();
}

std::string orbit_table_csv(const Graph& g, std::span<const OrbitRow> rows) {
  std::ostringstream out;
  out << "no,pmc,fn,representative\n";
  for (const OrbitRow& r : rows) {
    out << r.no << ',' << r.pmc << ',' << r.fn << ",\""
        << edge_set_to_text(g, r.representative) << "\"\n";
  }
  return out.str();
}

Json poly_report_json(const Graph& g, const ForcingPolynomial& p,
                      std::span<const OrbitRow> rows) {
  Json j = graph_to_json(g);
  j.erase("vertices");
  j.erase("edges");
  j["polynomial"] = polynomial_json(p);
  j["polynomial_text"] = p.to_string();
  j["stats"] = p.empty() ? Json(nullptr) : stats_json(poly_stats(p));
  Json orbits = Json::array();
  for (const OrbitRow& r : rows) {
    Json o;
    o["representative_edges"] = edge_indices_json(r.representative);
    o["pmc"] = r.pmc;
    o["fn"] = r.fn;
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gpforce
