// Copyright 2026 The Abundancy Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abundancy/limits.hpp"

#include <stdexcept>
#include <string>

#include "abundancy/divisor_core.hpp"

namespace abundancy {

CoprimeSplit coprime_split(const Natural& n, const Natural& m) {
  if (n.is_zero() || m.is_zero()) throw std::domain_error("coprime_split: arguments must be positive");
  Natural a = n;
  for (Natural g = gcd(a, m); !g.is_one(); g = gcd(a, g)) a = exact_div(a, g);
  Natural b = exact_div(n, a);
  return CoprimeSplit{std::move(a), std::move(b)};
}

PositiveRational limit_prime_product(const Factorization& m, std::uint32_t x) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
  PositiveRational product;
  for (const auto& f : m.factors()) {
    const Natural px = pow(f.prime, x);
    product = product * PositiveRational(px, px - Natural(1));
  }
  return product;
}

LimitResult limit_general(const LimitSpec& query) {
  if (query.n.is_zero() || query.m.is_zero()) throw std::domain_error("limit: n and m must be positive");
  if (query.m.is_one()) return LimitResult{abundancy(query.x, query.n), true};
  const CoprimeSplit split = coprime_split(query.n, query.m);
  return LimitResult{abundancy(query.x, split.a) * limit_prime_product(factorize(query.m), query.x), false};
}

std::string_view to_string(RatioInvariance r) {
  switch (r) {
    case RatioInvariance::kHolds:
      return "holds";
    case RatioInvariance::kFails:
      return "fails";
    case RatioInvariance::kNotApplicable:
      return "not applicable";
  }
  return "unknown";
}

RatioInvariance ratio_invariance_check(const Natural& n1, const Natural& n2, const Natural& m,
                                       std::uint32_t k, std::uint32_t j, std::uint32_t x) {
  if (n1.is_zero() || n2.is_zero() || m.is_zero()) {
    throw std::domain_error("ratio_invariance_check: arguments must be positive");
  }
  if (k == 0) throw std::domain_error("ratio_invariance_check: k must be at least 1");
  if (coprime_split(n1, m).b != coprime_split(n2, m).b) return RatioInvariance::kNotApplicable;

  const Natural mk = pow(m, k);
  const Natural mj = pow(m, j);
  const PositiveRational lhs = abundancy(x, n1 * mk) / abundancy(x, n1 * mj);
  const PositiveRational rhs = abundancy(x, n2 * mk) / abundancy(x, n2 * mj);
  return lhs == rhs ? RatioInvariance::kHolds : RatioInvariance::kFails;
}

std::vector<EvenPerfectTerm> even_perfect_sequence(std::uint32_t count, std::uint32_t x,
                                                   const EvenPerfectOptions& options) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
  if (count > options.max_count) {
    throw std::domain_error("even_perfect_sequence: count " + std::to_string(count) +
                            " exceeds the configured maximum " + std::to_string(options.max_count));
  }
  std::vector<EvenPerfectTerm> terms;
  for (std::uint32_t p = 2; terms.size() < count; ++p) {
    if (!is_probable_prime(Natural(p))) continue;
    const Natural mersenne = pow(Natural(2), p) - Natural(1);
    const bool mersenne_prime = is_probable_prime(mersenne);
    if (options.mersenne_only && !mersenne_prime) continue;

    // The two parts are coprime, so the index factors.
    const PositiveRational two_part = abundancy(x, Factorization::prime_power(Natural(2), p - 1));
    const PositiveRational odd_part = mersenne_prime
                                          ? PositiveRational(pow(mersenne, x) + Natural(1), pow(mersenne, x))
                                          : abundancy(x, factorize(mersenne));
    terms.push_back(EvenPerfectTerm{Natural(p), pow(Natural(2), p - 1) * mersenne, two_part * odd_part,
                                    mersenne_prime});
  }
  return terms;
}

PositiveRational even_perfect_limit(std::uint32_t x) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
  const Natural px = pow(Natural(2), x);
  return PositiveRational(px, px - Natural(1));
}

}  // namespace abundancy
