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

#include "gpforce/orbits.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gpforce/errors.hpp"

namespace gpforce {

std::string_view group_name(OrbitGroup group) {
  return group == OrbitGroup::kRotation ? "rotation" : "dihedral";
}

Matching transform_matching(const Graph& g, const Matching& m, int j,
                            bool reflect) {
  Matching out;
  m.for_each([&](int e) {
    const int f = reflect ? reflect_edge_index(g, e) : e;
    out.set(rotate_edge_index(g, f, j));
  });
  return out;
}

Matching canonical_form(const Graph& g, const Matching& m, OrbitGroup group) {
  if (!g.gp_params()) throw DomainError("orbits require a GP graph");
  const int n = g.gp_params()->n;
  Matching best = m;
  for (int reflect = 0; reflect <= (group == OrbitGroup::kDihedral ? 1 : 0);
       ++reflect) {
    for (int j = 0; j < n; ++j) {
      best = std::min(best, transform_matching(g, m, j, reflect != 0));
    }
  }
  return best;
}

std::vector<Orbit> matching_orbits(const Graph& g,
                                   std::span<const Matching> matchings,
                                   std::span<const ForcingResult> results,
                                   OrbitGroup group) {
  if (matchings.size() != results.size()) {
    throw DomainError("need one forcing result per matching");
  }
  std::map<Matching, Orbit> by_representative;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    const Matching rep = canonical_form(g, matchings[i], group);
    auto [it, inserted] = by_representative.try_emplace(rep);
    Orbit& orbit = it->second;
    if (inserted) {
      orbit.representative = rep;
      orbit.forcing_number = results[i].forcing_number;
    } else if (orbit.forcing_number != results[i].forcing_number) {
      throw OrbitInconsistency(
          "orbit of " + edge_set_to_text(g, rep) + " mixes forcing numbers " +
          std::to_string(orbit.forcing_number) + " and " +
          std::to_string(results[i].forcing_number));
    }
    orbit.members.push_back(matchings[i]);
  }
  std::vector<Orbit> out;
  out.reserve(by_representative.size());
  for (auto& [rep, orbit] : by_representative) {
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()),
                        orbit.members.end());
    orbit.size = static_cast<int>(orbit.members.size());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::pair<int, int>> orbit_signature(std::span<const Orbit> orbits) {
  std::vector<std::pair<int, int>> out;
  out.reserve(orbits.size());
  for (const Orbit& o : orbits) out.emplace_back(o.size, o.forcing_number);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gpforce
