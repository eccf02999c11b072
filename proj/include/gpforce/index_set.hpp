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

#ifndef GPFORCE_INDEX_SET_HPP_
#define GPFORCE_INDEX_SET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace gpforce {

// Upper bound on vertex and edge indices representable in an IndexSet.
// GP(40,k) needs 80 vertices and 120 edges.
inline constexpr int kMaxIndex = 128;

// Fixed-width set of small non-negative integers, tagged so that edge sets
// and vertex sets cannot be mixed up. Ordering compares the sets as 128-bit
// unsigned integers (bit i has weight 2^i), which is the canonical
// "bit-encoding" order used for sorting matchings and picking orbit
// representatives.
template <typename Tag>
class IndexSet {
 public:
  constexpr IndexSet() = default;

  static constexpr IndexSet of(int i) {
    IndexSet s;
    s.set(i);
    return s;
  }

  template <typename Range>
  static IndexSet from_indices(const Range& indices) {
    IndexSet s;
    for (int i : indices) s.set(i);
    return s;
  }

  // The set {0, ..., count-1}.
  static constexpr IndexSet prefix(int count) {
    IndexSet s;
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (count >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (count > lo) {
        s.words_[w] = (std::uint64_t{1} << (count - lo)) - 1;
      }
    }
    return s;
  }

  constexpr bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  constexpr int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  constexpr bool intersects(const IndexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool is_subset_of(const IndexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  // Smallest member, or -1 when empty.
  constexpr int lowest() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  constexpr std::uint64_t word(int w) const { return words_[w]; }

  constexpr IndexSet& operator|=(const IndexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr IndexSet& operator&=(const IndexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  // Set difference.
  constexpr IndexSet& operator-=(const IndexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }

  friend constexpr IndexSet operator|(IndexSet a, const IndexSet& b) {
    return a |= b;
  }
  friend constexpr IndexSet operator&(IndexSet a, const IndexSet& b) {
    return a &= b;
  }
  friend constexpr IndexSet operator-(IndexSet a, const IndexSet& b) {
    return a -= b;
  }

  friend constexpr bool operator==(const IndexSet&, const IndexSet&) = default;
  friend constexpr std::strong_ordering operator<=>(const IndexSet& a,
                                                    const IndexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  static constexpr int kWords = kMaxIndex / 64;
  std::array<std::uint64_t, kWords> words_{};
};

struct EdgeTag {};
struct VertexTag {};

using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

}  // namespace gpforce

#endif  // GPFORCE_INDEX_SET_HPP_
