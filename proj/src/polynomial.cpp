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

#include "gpforce/polynomial.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "gpforce/errors.hpp"
#include "gpforce/parallel.hpp"

namespace gpforce {

ForcingPolynomial::ForcingPolynomial(
    const std::map<int, std::int64_t>& coeffs) {
  for (const auto& [exponent, count] : coeffs) add(exponent, count);
}

void ForcingPolynomial::add(int exponent, std::int64_t count) {
  if (exponent < 0) throw DomainError("negative exponent");
  if (count < 0) throw DomainError("negative coefficient");
  if (count == 0) return;
  coeffs_[exponent] += count;
}

std::int64_t ForcingPolynomial::coefficient(int exponent) const {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

std::string ForcingPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [exponent, count] = *it;
    if (!out.empty()) out += '+';
    if (count != 1 || exponent == 0) out += std::to_string(count);
    if (exponent >= 1) out += 'x';
    if (exponent >= 2) out += '^' + std::to_string(exponent);
  }
  return out;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::to_decimal(int places) const {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num < 0;
  const std::int64_t magnitude = negative ? -num : num;
  // round(|num| * scale / den), half away from zero
  const std::int64_t scaled = (2 * magnitude * scale + den) / (2 * den);
  std::string out = (negative && scaled != 0 ? "-" : "") +
                    std::to_string(scaled / scale);
  if (places > 0) {
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

PolyStats poly_stats(const ForcingPolynomial& p) {
  if (p.empty()) {
    throw DomainError("empty forcing polynomial: the graph has no perfect matching");
  }
  PolyStats s;
  std::int64_t derivative_at_one = 0;
  for (const auto& [exponent, count] : p.coefficients()) {
    s.pm_count += count;
    derivative_at_one += exponent * count;
    s.spectrum.push_back(exponent);
  }
  s.average_forcing = Rational::make(derivative_at_one, s.pm_count);
  s.min_forcing = s.spectrum.front();
  s.max_forcing = s.spectrum.back();
  return s;
}

ForcingPolynomial polynomial_from_results(
    std::span<const ForcingResult> results) {
  ForcingPolynomial p;
  for (const ForcingResult& r : results) p.add(r.forcing_number);
  return p;
}

std::vector<ForcingResult> GraphAnalysis::forcing_results() const {
  std::vector<ForcingResult> out;
  out.reserve(records.size());
  for (const MatchingAnalysis& r : records) out.push_back(r.forcing);
  return out;
}

GraphAnalysis analyze_graph(const Graph& g, Method method, int threads) {
  GraphAnalysis out;
  out.matchings = enumerate_perfect_matchings(g);
  out.records.resize(out.matchings.size());
  parallel_for(out.matchings.size(), threads, [&](std::size_t i) {
    out.records[i] = analyze_matching(g, out.matchings[i], method);
  });
  out.polynomial = polynomial_from_results(out.forcing_results());
  return out;
}

std::vector<ForcingResult> forcing_results(const Graph& g,
                                           std::span<const Matching> matchings,
                                           Method method, int threads) {
  std::vector<ForcingResult> results(matchings.size());
  parallel_for(matchings.size(), threads, [&](std::size_t i) {
    results[i] = compute_forcing_number(g, matchings[i], method);
  });
  return results;
}

ForcingPolynomial forcing_polynomial(const Graph& g, Method method,
                                     int threads) {
  const MatchingSet matchings = enumerate_perfect_matchings(g);
  return polynomial_from_results(
      forcing_results(g, matchings, method, threads));
}

}  // namespace gpforce
