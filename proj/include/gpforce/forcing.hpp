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

#ifndef GPFORCE_FORCING_HPP_
#define GPFORCE_FORCING_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "gpforce/graph.hpp"
#include "gpforce/index_set.hpp"
#include "gpforce/matching.hpp"

namespace gpforce {

// An M-alternating cycle. vertices[0]-vertices[1] is its smallest matched
// edge; consecutive vertices alternate matched / unmatched edges and the
// last vertex closes back to the first through an unmatched edge.
struct AltCycle {
  std::vector<int> vertices;
  EdgeSet matched_edges;
  VertexSet vertex_set;
  EdgeSet edges;  // matched and unmatched; identifies the cycle

  int length() const { return static_cast<int>(vertices.size()); }
};

enum class Method { kSubsetSearch, kHittingSet, kBoth };

std::string_view method_name(Method m);

struct ForcingResult {
  int forcing_number = 0;
  EdgeSet witness;  // a minimum forcing set
  Method method = Method::kHittingSet;
};

struct CyclePacking {
  std::vector<AltCycle> cycles;  // pairwise vertex-disjoint
  int size() const { return static_cast<int>(cycles.size()); }
};

enum class Criterion { kUniqueness, kCycles };

// Every M-alternating cycle exactly once; two cycles are the same when they
// have the same edge set. Throws DomainError unless m is a
// perfect matching of g.
std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g,
                                                   const Matching& m);

// Minimum set of M-edges meeting every alternating cycle, by branch and bound.
ForcingResult forcing_number_by_hitting_set(const Graph& g, const Matching& m);
ForcingResult forcing_number_by_hitting_set(std::span<const AltCycle> cycles,
                                            const Matching& m);

// Smallest k such that some k-subset of m lies in no other perfect matching.
// Subsets are tried in lexicographic order of edge indices, so the witness is
// the lexicographically first minimum forcing set.
ForcingResult forcing_number_by_subset_search(const Graph& g, const Matching& m);

// Runs one engine, or both with an agreement check (EngineMismatch).
ForcingResult compute_forcing_number(const Graph& g, const Matching& m,
                                     Method method);

// Whether s forces m. The uniqueness criterion counts perfect matchings
// containing s; the cycle criterion checks that s meets every alternating
// cycle. Throws DomainError unless s is a subset of m.
bool is_forcing(const Graph& g, const Matching& m, const EdgeSet& s,
                Criterion criterion);
bool is_forcing(std::span<const AltCycle> cycles, const Matching& m,
                const EdgeSet& s);

// Maximum set of pairwise vertex-disjoint alternating cycles.
CyclePacking max_disjoint_alternating_cycles(const Graph& g, const Matching& m);
CyclePacking max_disjoint_alternating_cycles(std::span<const AltCycle> cycles);

// The per-matching record reported by the CLI.
struct MatchingAnalysis {
  Matching matching;
  ForcingResult forcing;
  int packing_size = 0;
  int n_alt_cycles = 0;
};

MatchingAnalysis analyze_matching(const Graph& g, const Matching& m,
                                  Method method);

}  // namespace gpforce

#endif  // GPFORCE_FORCING_HPP_
