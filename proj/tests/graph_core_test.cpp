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

#include <set>
#include <utility>

#include "gpforce/errors.hpp"
#include "gpforce/graph.hpp"
#include "gtest/gtest.h"

namespace gpforce {
namespace {

std::pair<int, int> sorted_ends(const Graph& g, int e) {
  const auto [a, b] = g.edge(e);
  return {std::min(a, b), std::max(a, b)};
}

TEST(BuildGpTest, PetersenGraphSizes) {
  const Graph g = build_gp(5, 2);
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 15);
  ASSERT_TRUE(g.gp_params().has_value());
  EXPECT_EQ(g.gp_params()->n, 5);
  EXPECT_EQ(g.gp_params()->k, 2);
}

TEST(BuildGpTest, Gp12IsCubic) {
  const Graph g = build_gp(12, 2);
  EXPECT_EQ(g.num_vertices(), 24);
  EXPECT_EQ(g.num_edges(), 36);
  for (int v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(BuildGpTest, RejectsDegenerateParameters) {
  EXPECT_THROW(build_gp(6, 3), DomainError);
  EXPECT_THROW(build_gp(4, 1), DomainError);
  EXPECT_THROW(build_gp(7, 0), DomainError);
  EXPECT_THROW(build_gp(7, 7), DomainError);
  EXPECT_THROW(build_gp(43, 2), DomainError);
  EXPECT_NO_THROW(build_gp(40, 2));
}

TEST(BuildGpTest, CanonicalEdgeLayout) {
  const Graph g = build_gp(5, 2);
  EXPECT_EQ(g.edge_name(0), "u0-u2");
  EXPECT_EQ(g.edge_name(3), "u0-u3");  // u3 u_{3+2 mod 5}
  EXPECT_EQ(g.edge_name(4), "u1-u4");
  EXPECT_EQ(g.edge_name(5), "u0-v0");
  EXPECT_EQ(g.edge_name(9), "u4-v4");
  EXPECT_EQ(g.edge_name(10), "v0-v1");
  EXPECT_EQ(g.edge_name(14), "v0-v4");
  EXPECT_EQ(edge_class(g, 4), EdgeClass::kInner);
  EXPECT_EQ(edge_class(g, 5), EdgeClass::kSpoke);
  EXPECT_EQ(edge_class(g, 14), EdgeClass::kOuter);
}

TEST(BuildGpTest, VertexNamesRoundTrip) {
  const Graph g = build_gp(7, 3);
  for (int v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(g.parse_vertex(g.vertex_name(v)), v);
  }
  EXPECT_FALSE(g.parse_vertex("u7").has_value());
  EXPECT_FALSE(g.parse_vertex("w1").has_value());
  EXPECT_FALSE(g.parse_vertex("u").has_value());
  EXPECT_FALSE(g.parse_vertex("u1x").has_value());
}

TEST(ValidateTest, GpGraphsAreClean) {
  for (int n = 5; n <= 40; ++n) {
    for (int k = 1; k < n; ++k) {
      if (2 * k == n) continue;
      EXPECT_TRUE(validate(build_gp(n, k)).empty()) << n << "," << k;
    }
  }
}

TEST(ValidateTest, ReportsParallelEdge) {
  const Graph g(3, {{0, 1}, {1, 2}, {1, 0}});
  const auto violations = validate(g);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_NE(violations.front().find("parallel edge"), std::string::npos);
  EXPECT_THROW(make_graph(3, {{0, 1}, {1, 2}, {1, 0}}), DomainError);
}

TEST(ValidateTest, ReportsSelfLoop) {
  const Graph g(2, {{0, 0}, {0, 1}});
  const auto violations = validate(g);
  ASSERT_FALSE(violations.empty());
  EXPECT_NE(violations.front().find("self-loop"), std::string::npos);
}

TEST(ValidateTest, ReportsBrokenGpLayout) {
  // GP(5,2) edge table with two inner edges swapped.
  const Graph ref = build_gp(5, 2);
  std::vector<Edge> edges(ref.edges().begin(), ref.edges().end());
  std::swap(edges[0], edges[1]);
  const Graph g(10, edges, GpParams{5, 2});
  const auto violations = validate(g);
  ASSERT_FALSE(violations.empty());
  EXPECT_NE(violations.front().find("layout"), std::string::npos);
}

TEST(ValidateTest, ReportsWrongDegreeForGp) {
  const Graph g(10, {{0, 1}}, GpParams{5, 2});
  EXPECT_FALSE(validate(g).empty());
}

TEST(GraphTest, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Graph(2, {{0, 2}}), DomainError);
  EXPECT_THROW(Graph(kMaxIndex + 1, {}), DomainError);
}

TEST(GraphTest, FindEdge) {
  const Graph g = build_gp(5, 2);
  EXPECT_EQ(g.find_edge(0, 2), 0);
  EXPECT_EQ(g.find_edge(2, 0), 0);
  EXPECT_EQ(g.find_edge(5, 6), 10);
  EXPECT_FALSE(g.find_edge(0, 1).has_value());
  EXPECT_FALSE(g.find_edge(0, 99).has_value());
}

TEST(RotateEdgeIndexTest, Examples) {
  const Graph g = build_gp(5, 2);
  EXPECT_EQ(rotate_edge_index(g, 0, 1), 1);
  for (int e = 0; e < g.num_edges(); ++e) EXPECT_EQ(rotate_edge_index(g, e, 0), e);
  EXPECT_EQ(rotate_edge_index(g, 14, 1), 10);  // v4v0 -> v0v1
}

TEST(RotateEdgeIndexTest, RequiresGpGraph) {
  const Graph k2 = make_graph(2, {{0, 1}});
  EXPECT_THROW(rotate_edge_index(k2, 0, 1), DomainError);
  EXPECT_THROW(reflect_edge_index(k2, 0), DomainError);
}

// Rotations and the reflection are automorphisms: they map every edge onto an
// edge whose endpoints are the images of the original endpoints.
TEST(RotateEdgeIndexTest, AutomorphismBijectionAndComposition) {
  for (int n = 5; n <= 17; ++n) {
    for (int k : {1, 2, 3}) {
      if (2 * k == n || k >= n) continue;
      const Graph g = build_gp(n, k);
      auto image = [&](int v, int j, bool reflect) {
        const int cls = v / n;
        const int i = reflect ? (n - v % n) % n : v % n;
        return cls * n + (i + j) % n;
      };
      for (int j = 0; j < n; ++j) {
        std::set<int> seen;
        for (int e = 0; e < g.num_edges(); ++e) {
          const int r = rotate_edge_index(g, e, j);
          seen.insert(r);
          const auto [a, b] = g.edge(e);
          const int ia = image(a, j, false);
          const int ib = image(b, j, false);
          EXPECT_EQ(sorted_ends(g, r),
                    std::make_pair(std::min(ia, ib), std::max(ia, ib)));
          for (int j2 = 0; j2 < n; ++j2) {
            EXPECT_EQ(rotate_edge_index(g, r, j2),
                      rotate_edge_index(g, e, (j + j2) % n));
          }
        }
        EXPECT_EQ(static_cast<int>(seen.size()), g.num_edges());
      }
      for (int e = 0; e < g.num_edges(); ++e) {
        const int r = reflect_edge_index(g, e);
        const auto [a, b] = g.edge(e);
        const int ia = image(a, 0, true);
        const int ib = image(b, 0, true);
        EXPECT_EQ(sorted_ends(g, r),
                  std::make_pair(std::min(ia, ib), std::max(ia, ib)));
        EXPECT_EQ(reflect_edge_index(g, r), e);
      }
    }
  }
}

}  // namespace
}  // namespace gpforce
