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

#ifndef GPFORCE_MATCHING_HPP_
#define GPFORCE_MATCHING_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gpforce/graph.hpp"
#include "gpforce/index_set.hpp"

namespace gpforce {

// A perfect matching, as a set of edge indices.
using Matching = EdgeSet;

// All perfect matchings of a graph, ascending by bit-encoding.
using MatchingSet = std::vector<Matching>;

inline constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max();

// Backtracking enumeration branching on the lowest-index uncovered vertex.
MatchingSet enumerate_perfect_matchings(const Graph& g);

// min(limit, number of perfect matchings containing every edge of forced).
// Throws DomainError if two forced edges share a vertex or limit < 1.
std::int64_t count_matchings_containing(const Graph& g, const EdgeSet& forced,
                                        std::int64_t limit = kNoLimit);

bool is_perfect_matching(const Graph& g, const EdgeSet& m);

struct CoverDefects {
  std::vector<int> uncovered;
  std::vector<int> multiply_covered;
  bool ok() const { return uncovered.empty() && multiply_covered.empty(); }
};

// Which vertices an edge set leaves uncovered or covers more than once.
CoverDefects cover_defects(const Graph& g, const EdgeSet& m);

// Comma-separated edge names in ascending edge-index order,
// e.g. "u0-u2,u1-u3,u4-v4,v0-v1,v2-v3".
std::string edge_set_to_text(const Graph& g, const EdgeSet& edges);

// Inverse of edge_set_to_text; endpoint order within a name is free.
// Throws DomainError on unknown vertices or non-edges.
EdgeSet parse_edge_set(const Graph& g, std::string_view text);

}  // namespace gpforce

#endif  // GPFORCE_MATCHING_HPP_
