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

#include "gpforce/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <utility>

#include "gpforce/errors.hpp"

namespace gpforce {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::optional<int> parse_index(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

const GpParams& require_gp(const Graph& g) {
  if (!g.gp_params()) {
    throw DomainError("operation requires a generalized Petersen graph");
  }
  return *g.gp_params();
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges,
             std::optional<GpParams> gp)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      incident_(static_cast<std::size_t>(std::max(num_vertices, 0))),
      gp_(gp) {
  if (num_vertices < 0 || num_vertices > kMaxIndex) {
    throw DomainError("vertex count must lie in [0, " +
                      std::to_string(kMaxIndex) + "]");
  }
  if (static_cast<int>(edges_.size()) > kMaxIndex) {
    throw DomainError("edge count exceeds " + std::to_string(kMaxIndex));
  }
  for (int e = 0; e < num_edges(); ++e) {
    const auto [a, b] = edges_[e];
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices) {
      throw DomainError("edge " + std::to_string(e) +
                        " has an endpoint out of range");
    }
    incident_[a].push_back(e);
    if (b != a) incident_[b].push_back(e);
  }
}

std::optional<int> Graph::find_edge(int a, int b) const {
  if (a < 0 || a >= num_vertices_ || b < 0 || b >= num_vertices_) {
    return std::nullopt;
  }
  for (int e : incident_[a]) {
    if (other_end(e, a) == b) return e;
  }
  return std::nullopt;
}

std::string Graph::vertex_name(int v) const {
  if (gp_) {
    return v < gp_->n ? "u" + std::to_string(v)
                      : "v" + std::to_string(v - gp_->n);
  }
  return std::to_string(v);
}

std::string Graph::edge_name(int e) const {
  // u_i = i < n <= v_i, so vertex order is exactly "u before v, lower first".
  const auto [a, b] = edges_[e];
  return vertex_name(std::min(a, b)) + "-" + vertex_name(std::max(a, b));
}

std::optional<int> Graph::parse_vertex(std::string_view name) const {
  if (!gp_) {
    auto v = parse_index(name);
    if (!v || *v < 0 || *v >= num_vertices_) return std::nullopt;
    return v;
  }
  if (name.size() < 2 || (name[0] != 'u' && name[0] != 'v')) {
    return std::nullopt;
  }
  auto i = parse_index(name.substr(1));
  if (!i || *i < 0 || *i >= gp_->n) return std::nullopt;
  return name[0] == 'u' ? *i : gp_->n + *i;
}

Graph build_gp(int n, int k) {
  if (n < 5) throw DomainError("GP(n,k) requires n >= 5");
  if (2 * n > kMaxIndex || 3 * n > kMaxIndex) {
    throw DomainError("GP(n,k) supports n <= " + std::to_string(kMaxIndex / 3));
  }
  if (k < 1 || k > n - 1) throw DomainError("GP(n,k) requires 1 <= k <= n-1");
  if (2 * k == n) {
    throw DomainError("GP(n,k) with k = n/2 has parallel inner edges");
  }
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + k) % n});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + 1) % n});
  return Graph(2 * n, std::move(edges), GpParams{n, k});
}

Graph make_graph(int num_vertices,
                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> table;
  table.reserve(edges.size());
  for (const auto& [a, b] : edges) table.push_back({a, b});
  Graph g(num_vertices, std::move(table));
  if (auto violations = validate(g); !violations.empty()) {
    throw DomainError("invalid graph: " + violations.front());
  }
  return g;
}

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edge(e);
    if (a == b) {
      out.push_back("self-loop at edge " + std::to_string(e));
      continue;
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      out.push_back("parallel edge " + std::to_string(e) + " (" +
                    g.edge_name(e) + ")");
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int e : g.incident(v)) {
      const auto [a, b] = g.edge(e);
      if (a != v && b != v) {
        out.push_back("adjacency of vertex " + std::to_string(v) +
                      " lists non-incident edge " + std::to_string(e));
      }
    }
  }
  int listed = 0;
  for (int v = 0; v < g.num_vertices(); ++v) listed += g.degree(v);
  int expected = 0;
  for (const auto& [a, b] : g.edges()) expected += a == b ? 1 : 2;
  if (listed != expected) out.push_back("adjacency is not symmetric");

  if (const auto& gp = g.gp_params()) {
    const int n = gp->n;
    if (g.num_vertices() != 2 * n) out.push_back("GP graph must have 2n vertices");
    if (g.num_edges() != 3 * n) {
      out.push_back("GP graph must have 3n edges");
      return out;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) != 3) {
        out.push_back("vertex " + g.vertex_name(v) + " has degree " +
                      std::to_string(g.degree(v)) + ", expected 3");
      }
    }
    auto same = [](const Edge& x, int a, int b) {
      return (x.a == a && x.b == b) || (x.a == b && x.b == a);
    };
    for (int i = 0; i < n; ++i) {
      if (!same(g.edge(i), i, mod(i + gp->k, n)) ||
          !same(g.edge(n + i), i, n + i) ||
          !same(g.edge(2 * n + i), n + i, n + mod(i + 1, n))) {
        out.push_back("edge-class layout broken at i = " + std::to_string(i));
      }
    }
  }
  return out;
}

EdgeClass edge_class(const Graph& g, int e) {
  return static_cast<EdgeClass>(e / require_gp(g).n);
}

int rotate_edge_index(const Graph& g, int e, int j) {
  const int n = require_gp(g).n;
  return (e / n) * n + mod(e % n + j, n);
}

int reflect_edge_index(const Graph& g, int e) {
  const auto& gp = require_gp(g);
  const int n = gp.n;
  const int i = e % n;
  switch (static_cast<EdgeClass>(e / n)) {
    case EdgeClass::kInner:  // u_i u_{i+k} -> u_{-i-k} u_{-i}
      return mod(-i - gp.k, n);
    case EdgeClass::kSpoke:
      return n + mod(-i, n);
    case EdgeClass::kOuter:  // v_i v_{i+1} -> v_{-i-1} v_{-i}
      return 2 * n + mod(-i - 1, n);
  }
  return e;
}

}  // namespace gpforce
