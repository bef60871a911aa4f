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

#include "abundancy/divisor_core.hpp"

#include <cassert>
#include <stdexcept>

namespace abundancy {
namespace {

void require_exponent(std::uint32_t x) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
}

void require_positive(const Natural& n) {
  if (n.is_zero()) throw std::domain_error("argument n must be at least 1");
}

}  // namespace

Natural sigma_prime_power(const Natural& p, std::uint32_t k, std::uint32_t x) {
  require_exponent(x);
  const Natural px = pow(p, x);
  const Natural numer = pow(px, static_cast<unsigned long>(k) + 1) - Natural(1);
  const Natural denom = px - Natural(1);
  // A non-exact quotient means p was not a prime >= 2 or k got corrupted.
  assert(!denom.is_zero() && divides(denom, numer));
  return numer / denom;
}

Natural sigma_x(const Factorization& n, std::uint32_t x) {
  require_exponent(x);
  Natural result(1);
  for (const auto& [p, k] : n.factors()) result *= sigma_prime_power(p, k, x);
  return result;
}

Natural sigma_x(const Natural& n, std::uint32_t x) {
  require_positive(n);
  return sigma_x(factorize(n), x);
}

PositiveRational abundancy(std::uint32_t x, const Factorization& n) {
  require_exponent(x);
  return PositiveRational(sigma_x(n, x), pow(n.value(), x));
}

PositiveRational abundancy(std::uint32_t x, const Natural& n) {
  require_positive(n);
  return abundancy(x, factorize(n));
}

DeficiencyClass deficiency_class(const Natural& n) {
  require_positive(n);
  const Natural s = sigma_x(n, 1);
  const Natural twice = n * Natural(2);
  if (s < twice) return DeficiencyClass::kDeficient;
  if (s == twice) return DeficiencyClass::kPerfect;
  return DeficiencyClass::kAbundant;
}

std::string_view to_string(DeficiencyClass c) {
  switch (c) {
    case DeficiencyClass::kDeficient:
      return "deficient";
    case DeficiencyClass::kPerfect:
      return "perfect";
    case DeficiencyClass::kAbundant:
      return "abundant";
  }
  return "unknown";
}

}  // namespace abundancy
