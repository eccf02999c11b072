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

#ifndef GPFORCE_POLYNOMIAL_HPP_
#define GPFORCE_POLYNOMIAL_HPP_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gpforce/forcing.hpp"
#include "gpforce/graph.hpp"
#include "gpforce/matching.hpp"

namespace gpforce {

// F(G,x) as exponent -> coefficient, where the coefficient of x^i counts the
// perfect matchings with forcing number i. Only positive coefficients are
// stored, so the support is the forcing spectrum.
class ForcingPolynomial {
 public:
  ForcingPolynomial() = default;
  explicit ForcingPolynomial(const std::map<int, std::int64_t>& coeffs);
  ForcingPolynomial(
      std::initializer_list<std::pair<const int, std::int64_t>> coeffs)
      : ForcingPolynomial(std::map<int, std::int64_t>(coeffs)) {}

  void add(int exponent, std::int64_t count = 1);
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  // Descending exponents, no spaces, unit coefficients omitted:
  // "91x^4+53x^3", "x^3+21x^2", "1" for the constant polynomial 1.
  std::string to_string() const;

  friend bool operator==(const ForcingPolynomial&,
                         const ForcingPolynomial&) = default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  // "42/17", or "3" when the denominator is 1.
  std::string to_string() const;
  // Fixed-point rendering rounded half away from zero, e.g. "2.470588".
  std::string to_decimal(int places = 6) const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct PolyStats {
  std::int64_t pm_count = 0;     // F(G,1)
  Rational average_forcing;      // F'(G,1) / F(G,1)
  std::vector<int> spectrum;     // ascending exponents
  int min_forcing = 0;           // f(G)
  int max_forcing = 0;           // F(G)
};

// Throws DomainError on the empty polynomial.
PolyStats poly_stats(const ForcingPolynomial& p);

ForcingPolynomial polynomial_from_results(std::span<const ForcingResult> results);

// Everything computed for one graph: its perfect matchings and, in the same
// order, the per-matching analysis.
struct GraphAnalysis {
  MatchingSet matchings;
  std::vector<MatchingAnalysis> records;
  ForcingPolynomial polynomial;

  std::vector<ForcingResult> forcing_results() const;
};

// Enumerates matchings and analyzes them on a pool of threads. The result
// does not depend on the thread count.
GraphAnalysis analyze_graph(const Graph& g, Method method, int threads = 1);

// Forcing number of each matching, in input order.
std::vector<ForcingResult> forcing_results(const Graph& g,
                                           std::span<const Matching> matchings,
                                           Method method, int threads = 1);

// Forcing numbers only (no cycle packing), tallied into F(G,x).
// Method::kBoth throws EngineMismatch on any disagreement.
ForcingPolynomial forcing_polynomial(const Graph& g, Method method,
                                     int threads = 1);

}  // namespace gpforce

#endif  // GPFORCE_POLYNOMIAL_HPP_
