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

#include "gpforce/matching.hpp"

#include <algorithm>
#include <string>

#include "gpforce/errors.hpp"

namespace gpforce {
namespace {

// Depth-first search over partial matchings. Every uncovered vertex must keep
// at least one uncovered neighbour; this is checked around each newly
// covered pair.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g), all_(g.all_vertices()) {}

  // Calls visit(edges) for each completion; visit returns false to stop.
  template <typename Visit>
  bool run(VertexSet covered, EdgeSet chosen, Visit& visit) const {
    if (!viable(covered)) return true;
    return extend(covered, chosen, visit);
  }

 private:
  bool has_free_neighbour(int v, const VertexSet& covered) const {
    for (int e : g_.incident(v)) {
      if (!covered.test(g_.other_end(e, v))) return true;
    }
    return false;
  }

  bool viable(const VertexSet& covered) const {
    bool ok = true;
    (all_ - covered).for_each([&](int v) {
      if (ok && !has_free_neighbour(v, covered)) ok = false;
    });
    return ok;
  }

  bool locally_viable(int a, int b, const VertexSet& covered) const {
    for (int x : {a, b}) {
      for (int e : g_.incident(x)) {
        const int y = g_.other_end(e, x);
        if (!covered.test(y) && !has_free_neighbour(y, covered)) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  bool extend(const VertexSet& covered, const EdgeSet& chosen,
              Visit& visit) const {
    const int v = (all_ - covered).lowest();
    if (v < 0) return visit(chosen);
    for (int e : g_.incident(v)) {
      const int w = g_.other_end(e, v);
      if (w == v || covered.test(w)) continue;
      VertexSet next = covered;
      next.set(v);
      next.set(w);
      if (!locally_viable(v, w, next)) continue;
      EdgeSet with = chosen;
      with.set(e);
      if (!extend(next, with, visit)) return false;
    }
    return true;
  }

  const Graph& g_;
  VertexSet all_;
};

}  // namespace

MatchingSet enumerate_perfect_matchings(const Graph& g) {
  MatchingSet out;
  if (g.num_vertices() % 2 != 0) return out;
  auto collect = [&](const EdgeSet& m) {
    out.push_back(m);
    return true;
  };
  MatchingSearch(g).run(VertexSet{}, EdgeSet{}, collect);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_matchings_containing(const Graph& g, const EdgeSet& forced,
                                        std::int64_t limit) {
  if (limit < 1) throw DomainError("limit must be at least 1");
  VertexSet covered;
  bool disjoint = true;
  forced.for_each([&](int e) {
    if (e >= g.num_edges()) {
      throw DomainError("edge index " + std::to_string(e) + " out of range");
    }
    const VertexSet ends = g.endpoints(e);
    if (covered.intersects(ends)) disjoint = false;
    covered |= ends;
  });
  if (!disjoint) {
    throw DomainError("forced edges share a vertex: " +
                      edge_set_to_text(g, forced));
  }
  if ((g.num_vertices() - covered.count()) % 2 != 0) return 0;
  std::int64_t count = 0;
  auto tally = [&](const EdgeSet&) { return ++count < limit; };
  MatchingSearch(g).run(covered, forced, tally);
  return count;
}

CoverDefects cover_defects(const Graph& g, const EdgeSet& m) {
  std::vector<int> hits(static_cast<std::size_t>(g.num_vertices()), 0);
  m.for_each([&](int e) {
    if (e >= g.num_edges()) return;
    ++hits[g.edge(e).a];
    if (g.edge(e).b != g.edge(e).a) ++hits[g.edge(e).b];
  });
  CoverDefects out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (hits[v] == 0) out.uncovered.push_back(v);
    if (hits[v] > 1) out.multiply_covered.push_back(v);
  }
  return out;
}

bool is_perfect_matching(const Graph& g, const EdgeSet& m) {
  if (!m.is_subset_of(EdgeSet::prefix(g.num_edges()))) return false;
  return cover_defects(g, m).ok();
}

std::string edge_set_to_text(const Graph& g, const EdgeSet& edges) {
  std::string out;
  edges.for_each([&](int e) {
    if (!out.empty()) out += ',';
    out += g.edge_name(e);
  });
  return out;
}

EdgeSet parse_edge_set(const Graph& g, std::string_view text) {
  EdgeSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      const std::size_t dash = token.find('-');
      if (dash == std::string_view::npos) {
        throw DomainError("malformed edge '" + std::string(token) + "'");
      }
      const auto a = g.parse_vertex(token.substr(0, dash));
      const auto b = g.parse_vertex(token.substr(dash + 1));
      if (!a || !b) {
        throw DomainError("unknown vertex in '" + std::string(token) + "'");
      }
      const auto e = g.find_edge(*a, *b);
      if (!e) throw DomainError("not an edge: '" + std::string(token) + "'");
      out.set(*e);
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace gpforce
