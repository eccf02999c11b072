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

#ifndef GPFORCE_ORBITS_HPP_
#define GPFORCE_ORBITS_HPP_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gpforce/forcing.hpp"
#include "gpforce/graph.hpp"
#include "gpforce/matching.hpp"

namespace gpforce {

// rotation: the cyclic maps g_j (u_i -> u_{i+j}, v_i -> v_{i+j}).
// dihedral: rotations together with i -> -i.
enum class OrbitGroup { kRotation, kDihedral };

std::string_view group_name(OrbitGroup group);

// A class of equivalent matchings. representative is the member with the
// smallest bit-encoding, which is also the smallest image of any member.
struct Orbit {
  Matching representative;
  int size = 0;            // number of members
  int forcing_number = 0;  // shared by all members
  std::vector<Matching> members;  // ascending
};

// Image of m under the group element "rotate by j, reflecting first if
// reflect is set".
Matching transform_matching(const Graph& g, const Matching& m, int j,
                            bool reflect);

// Smallest image of m over the group.
Matching canonical_form(const Graph& g, const Matching& m, OrbitGroup group);

// Partitions matchings (results[i] belongs to matchings[i]) into orbits
// sorted by representative. Throws DomainError on non-GP graphs or a size
// mismatch and OrbitInconsistency if an orbit mixes forcing numbers.
std::vector<Orbit> matching_orbits(const Graph& g,
                                   std::span<const Matching> matchings,
                                   std::span<const ForcingResult> results,
                                   OrbitGroup group);

inline std::vector<Orbit> rotation_orbits(const Graph& g,
                                          std::span<const Matching> matchings,
                                          std::span<const ForcingResult> results) {
  return matching_orbits(g, matchings, results, OrbitGroup::kRotation);
}

// (orbit size, forcing number) pairs, sorted; the comparable content of a
// table of non-equivalent structures.
std::vector<std::pair<int, int>> orbit_signature(std::span<const Orbit> orbits);

}  // namespace gpforce

#endif  // GPFORCE_ORBITS_HPP_
