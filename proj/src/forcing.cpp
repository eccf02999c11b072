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

#include "gpforce/forcing.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "gpforce/errors.hpp"

namespace gpforce {
namespace {

void require_perfect_matching(const Graph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) {
    throw DomainError("not a perfect matching: " + edge_set_to_text(g, m));
  }
}

bool fewer_edges_first(const EdgeSet& a, const EdgeSet& b) {
  const int ca = a.count();
  const int cb = b.count();
  return ca != cb ? ca < cb : a < b;
}

// Drops duplicates and any set that contains another set of the family;
// hitting the smaller set always hits the larger one.
std::vector<EdgeSet> minimal_sets(std::vector<EdgeSet> sets) {
  std::sort(sets.begin(), sets.end(), fewer_edges_first);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<EdgeSet> kept;
  for (const EdgeSet& s : sets) {
    const bool dominated = std::any_of(
        kept.begin(), kept.end(),
        [&](const EdgeSet& t) { return t.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

// Exact minimum hitting set. open holds the still-unhit sets with already
// excluded edges removed, sorted by fewer_edges_first.
class HittingSetSearch {
 public:
  explicit HittingSetSearch(EdgeSet upper)
      : best_(upper), best_size_(upper.count()) {}

  void search(const std::vector<EdgeSet>& open, const EdgeSet& chosen) {
    const int size = chosen.count();
    if (open.empty()) {
      if (size < best_size_) {
        best_ = chosen;
        best_size_ = size;
      }
      return;
    }
    if (size + disjoint_lower_bound(open) >= best_size_) return;

    // Branch on the smallest unhit set; edge e_i is taken in branch i and
    // forbidden in every later branch.
    const EdgeSet pivot = open.front();
    EdgeSet excluded;
    for (int e : pivot.indices()) {
      std::vector<EdgeSet> next;
      next.reserve(open.size());
      bool feasible = true;
      for (const EdgeSet& s : open) {
        if (s.test(e)) continue;
        EdgeSet rest = s - excluded;
        if (rest.empty()) {
          feasible = false;
          break;
        }
        next.push_back(rest);
      }
      if (feasible) {
        std::sort(next.begin(), next.end(), fewer_edges_first);
        EdgeSet with = chosen;
        with.set(e);
        search(next, with);
      }
      excluded.set(e);
    }
  }

  const EdgeSet& best() const { return best_; }
  int best_size() const { return best_size_; }

 private:
  // Pairwise disjoint sets each need their own edge.
  static int disjoint_lower_bound(const std::vector<EdgeSet>& open) {
    EdgeSet used;
    int count = 0;
    for (const EdgeSet& s : open) {
      if (!s.intersects(used)) {
        used |= s;
        ++count;
      }
    }
    return count;
  }

  EdgeSet best_;
  int best_size_;
};

class PackingSearch {
 public:
  PackingSearch(std::span<const AltCycle> cycles, std::vector<int> order,
                int free_vertices)
      : cycles_(cycles), order_(std::move(order)),
        free_vertices_(free_vertices) {}

  void search(std::size_t from, const VertexSet& used) {
    if (current_.size() > best_.size()) best_ = current_;
    const int free = free_vertices_ - used.count();
    for (std::size_t i = from; i < order_.size(); ++i) {
      const std::size_t bound = std::min<std::size_t>(order_.size() - i,
                                                      static_cast<std::size_t>(free / 4));
      if (current_.size() + bound <= best_.size()) return;
      const AltCycle& c = cycles_[order_[i]];
      if (c.vertex_set.intersects(used)) continue;
      current_.push_back(order_[i]);
      search(i + 1, used | c.vertex_set);
      current_.pop_back();
    }
  }

  const std::vector<int>& best() const { return best_; }

 private:
  std::span<const AltCycle> cycles_;
  std::vector<int> order_;
  int free_vertices_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kSubsetSearch:
      return "subsets";
    case Method::kHittingSet:
      return "cycles";
    case Method::kBoth:
      return "both";
  }
  return "unknown";
}

std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g,
                                                   const Matching& m) {
  require_perfect_matching(g, m);
  std::vector<int> mate_edge(static_cast<std::size_t>(g.num_vertices()), -1);
  m.for_each([&](int e) {
    mate_edge[g.edge(e).a] = e;
    mate_edge[g.edge(e).b] = e;
  });

  std::vector<AltCycle> out;
  std::set<EdgeSet> seen;
  std::vector<int> path;

  // Grows the path from vertex x, which was just reached through a matched
  // edge. Only matched edges with index above first are admitted, so each
  // cycle is built from its smallest matched edge, in one direction.
  auto extend = [&](auto& self, int first, int x, EdgeSet matched,
                    EdgeSet edges, VertexSet visited) -> void {
    const int start = path.front();
    for (int f : g.incident(x)) {
      if (m.test(f)) continue;
      const int y = g.other_end(f, x);
      if (y == start && path.size() >= 4) {
        EdgeSet closed = edges;
        closed.set(f);
        if (seen.insert(closed).second) {
          out.push_back(AltCycle{path, matched, visited, closed});
        }
        continue;
      }
      if (visited.test(y) || mate_edge[y] <= first) continue;
      const int z = g.other_end(mate_edge[y], y);
      path.push_back(y);
      path.push_back(z);
      EdgeSet next_matched = matched;
      next_matched.set(mate_edge[y]);
      EdgeSet next_edges = edges | next_matched;
      next_edges.set(f);
      VertexSet next_visited = visited;
      next_visited.set(y);
      next_visited.set(z);
      self(self, first, z, next_matched, next_edges, next_visited);
      path.pop_back();
      path.pop_back();
    }
  };

  m.for_each([&](int e) {
    const int a = std::min(g.edge(e).a, g.edge(e).b);
    const int b = std::max(g.edge(e).a, g.edge(e).b);
    path = {a, b};
    extend(extend, e, b, EdgeSet::of(e), EdgeSet::of(e), g.endpoints(e));
  });
  return out;
}

ForcingResult forcing_number_by_hitting_set(std::span<const AltCycle> cycles,
                                            const Matching& m) {
  std::vector<EdgeSet> sets;
  sets.reserve(cycles.size());
  for (const AltCycle& c : cycles) sets.push_back(c.matched_edges);
  HittingSetSearch solver(m);
  solver.search(minimal_sets(std::move(sets)), EdgeSet{});
  return ForcingResult{solver.best_size(), solver.best(), Method::kHittingSet};
}

ForcingResult forcing_number_by_hitting_set(const Graph& g, const Matching& m) {
  const auto cycles = enumerate_alternating_cycles(g, m);
  return forcing_number_by_hitting_set(cycles, m);
}

ForcingResult forcing_number_by_subset_search(const Graph& g,
                                              const Matching& m) {
  require_perfect_matching(g, m);
  const std::vector<int> edges = m.indices();
  const int size = static_cast<int>(edges.size());
  std::vector<int> pick;
  for (int k = 0; k <= size; ++k) {
    pick.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      EdgeSet subset;
      for (int i : pick) subset.set(edges[i]);
      if (count_matchings_containing(g, subset, 2) == 1) {
        return ForcingResult{k, subset, Method::kSubsetSearch};
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[i] == size - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // Unreachable: m itself is always forcing.
  return ForcingResult{size, m, Method::kSubsetSearch};
}

ForcingResult compute_forcing_number(const Graph& g, const Matching& m,
                                     Method method) {
  switch (method) {
    case Method::kSubsetSearch:
      return forcing_number_by_subset_search(g, m);
    case Method::kHittingSet:
      return forcing_number_by_hitting_set(g, m);
    case Method::kBoth:
      break;
  }
  const ForcingResult by_cycles = forcing_number_by_hitting_set(g, m);
  ForcingResult by_subsets = forcing_number_by_subset_search(g, m);
  if (by_cycles.forcing_number != by_subsets.forcing_number) {
    throw EngineMismatch(
        "forcing engines disagree on " + edge_set_to_text(g, m) +
        ": hitting set gives " + std::to_string(by_cycles.forcing_number) +
        ", subset search gives " + std::to_string(by_subsets.forcing_number));
  }
  by_subsets.method = Method::kBoth;
  return by_subsets;
}

bool is_forcing(std::span<const AltCycle> cycles, const Matching& m,
                const EdgeSet& s) {
  if (!s.is_subset_of(m)) throw DomainError("subset is not contained in M");
  return std::all_of(cycles.begin(), cycles.end(), [&](const AltCycle& c) {
    return c.matched_edges.intersects(s);
  });
}

bool is_forcing(const Graph& g, const Matching& m, const EdgeSet& s,
                Criterion criterion) {
  require_perfect_matching(g, m);
  if (!s.is_subset_of(m)) throw DomainError("subset is not contained in M");
  if (criterion == Criterion::kUniqueness) {
    return count_matchings_containing(g, s, 2) == 1;
  }
  const auto cycles = enumerate_alternating_cycles(g, m);
  return is_forcing(cycles, m, s);
}

CyclePacking max_disjoint_alternating_cycles(std::span<const AltCycle> cycles) {
  std::vector<int> order(cycles.size());
  VertexSet touched;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    order[i] = static_cast<int>(i);
    touched |= cycles[i].vertex_set;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const AltCycle& x = cycles[a];
    const AltCycle& y = cycles[b];
    if (x.length() != y.length()) return x.length() < y.length();
    return x.vertex_set < y.vertex_set;
  });
  PackingSearch solver(cycles, std::move(order), touched.count());
  solver.search(0, VertexSet{});
  CyclePacking out;
  for (int i : solver.best()) out.cycles.push_back(cycles[i]);
  return out;
}

CyclePacking max_disjoint_alternating_cycles(const Graph& g, const Matching& m) {
  const auto cycles = enumerate_alternating_cycles(g, m);
  return max_disjoint_alternating_cycles(cycles);
}

MatchingAnalysis analyze_matching(const Graph& g, const Matching& m,
                                  Method method) {
  const auto cycles = enumerate_alternating_cycles(g, m);
  MatchingAnalysis out;
  out.matching = m;
  out.forcing = method == Method::kHittingSet
                    ? forcing_number_by_hitting_set(cycles, m)
                    : compute_forcing_number(g, m, method);
  out.packing_size = max_disjoint_alternating_cycles(cycles).size();
  out.n_alt_cycles = static_cast<int>(cycles.size());
  return out;
}

}  // namespace gpforce
