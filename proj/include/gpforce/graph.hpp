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

#ifndef GPFORCE_GRAPH_HPP_
#define GPFORCE_GRAPH_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpforce/index_set.hpp"

namespace gpforce {

struct GpParams {
  int n = 0;
  int k = 0;
};

struct Edge {
  int a = 0;
  int b = 0;
};

// Edge classes of GP(n,k), in canonical index order.
enum class EdgeClass { kInner = 0, kSpoke = 1, kOuter = 2 };

// Immutable simple graph with a fixed edge ordering. Vertex and edge indices
// are bounded by kMaxIndex so that vertex and edge subsets fit an IndexSet.
//
// For GP(n,k) the vertices are u_i = i and v_i = n + i, and edge indices are
// laid out as [inner u_i u_{i+k} | spokes u_i v_i | outer v_i v_{i+1}], each
// block indexed by i.
class Graph {
 public:
  // Builds adjacency from the edge table without checking simplicity; use
  // validate() or make_graph() for checked construction. Throws DomainError
  // only when an endpoint is out of range or a size limit is exceeded.
  Graph(int num_vertices, std::vector<Edge> edges,
        std::optional<GpParams> gp = std::nullopt);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> incident(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  int other_end(int e, int v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }
  VertexSet endpoints(int e) const {
    VertexSet s = VertexSet::of(edges_[e].a);
    s.set(edges_[e].b);
    return s;
  }
  VertexSet all_vertices() const { return VertexSet::prefix(num_vertices_); }

  // Index of the edge joining a and b, if any.
  std::optional<int> find_edge(int a, int b) const;

  const std::optional<GpParams>& gp_params() const { return gp_; }

  // "u3"/"v3" for GP graphs, the decimal index otherwise.
  std::string vertex_name(int v) const;
  // Endpoints ordered u before v, lower index first: "u0-u2", "u4-v4".
  std::string edge_name(int e) const;
  // Vertex index for a name produced by vertex_name(), if valid.
  std::optional<int> parse_vertex(std::string_view name) const;

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::optional<GpParams> gp_;
};

// GP(n,k) with the canonical edge ordering. Throws DomainError for n < 5,
// k outside [1, n-1], k = n/2, or n beyond the IndexSet capacity.
Graph build_gp(int n, int k);

// General simple graph; throws DomainError when validate() reports anything.
Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

// Structural checks. Empty result means the graph is sound. For GP graphs
// this also covers 3-regularity and the canonical edge-class layout.
std::vector<std::string> validate(const Graph& g);

EdgeClass edge_class(const Graph& g, int e);

// Image of edge e under g_j: u_i -> u_{i+j}, v_i -> v_{i+j}. Within each edge
// class the map is i -> (i + j) mod n. Throws DomainError on non-GP graphs.
int rotate_edge_index(const Graph& g, int e, int j);

// Image of edge e under the reflection u_i -> u_{-i}, v_i -> v_{-i}.
int reflect_edge_index(const Graph& g, int e);

}  // namespace gpforce

#endif  // GPFORCE_GRAPH_HPP_
