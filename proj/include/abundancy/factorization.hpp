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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abundancy/natural.hpp"

namespace abundancy {

struct PrimePower {
  Natural prime;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: strictly increasing primes, positive
/// exponents. The empty factorization represents 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates ordering, exponents and primality; throws std::domain_error.
  static Factorization from_factors(std::vector<PrimePower> factors);

  /// p^k for a prime p; no primality re-check.
  static Factorization prime_power(Natural p, std::uint32_t k);

  std::span<const PrimePower> factors() const& { return factors_; }
  std::span<const PrimePower> factors() && = delete;
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const PrimePower& operator[](std::size_t i) const { return factors_[i]; }

  Natural value() const;

  /// Exponent of p in this number, 0 when p does not divide it.
  std::uint32_t exponent_of(const Natural& p) const;

  /// Number of divisors, Π (k_i + 1); saturates at UINT64_MAX.
  std::uint64_t divisor_count() const;

  /// n / p_j^{k_j}.
  Factorization without(std::size_t j) const;

  /// p_j^{k_j} as its own factorization.
  Factorization component(std::size_t j) const;

  /// n * p for a prime p (which may or may not already divide n).
  Factorization times_prime(const Natural& p) const;

  /// Every exponent multiplied by `x`.
  Factorization power(std::uint32_t x) const;

  /// "2^2 * 3", or "1" for the empty factorization.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  explicit Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

  friend Factorization gcd_fact(const Factorization&, const Factorization&);
  friend Factorization lcm_fact(const Factorization&, const Factorization&);
  friend Factorization multiply(const Factorization&, const Factorization&);
  friend Factorization quotient(const Factorization&, const Factorization&);
  friend struct FactorizationBuilder;

  std::vector<PrimePower> factors_;
};

struct FactorizeOptions {
  /// Trial division runs over primes up to this bound before the
  /// probable-prime test and Pollard-Brent rho take over.
  std::uint32_t trial_bound = 1'000'000;
  /// Seed for the rho polynomial constant; fixed so output is reproducible.
  std::uint64_t rho_seed = 1;
};

/// Probable-prime test (GMP Miller-Rabin with 32 rounds; exact below 2^64).
bool is_probable_prime(const Natural& n);

/// Throws std::domain_error for n = 0.
Factorization factorize(const Natural& n, const FactorizeOptions& options = {});

/// All divisors in ascending order.
std::vector<Natural> divisors(const Factorization& f);

/// Ascending divisors, or nullopt when there are more than `cap`.
std::optional<std::vector<Natural>> divisors_capped(const Factorization& f, std::uint64_t cap);

/// Factorizations of all divisors, ascending by value, or nullopt when
/// there are more than `cap`.
std::optional<std::vector<Factorization>> divisor_factorizations(const Factorization& f, std::uint64_t cap);

/// Exponentwise minimum / maximum.
Factorization gcd_fact(const Factorization& a, const Factorization& b);
Factorization lcm_fact(const Factorization& a, const Factorization& b);
Factorization multiply(const Factorization& a, const Factorization& b);

/// a / b; throws std::domain_error when b does not divide a.
Factorization quotient(const Factorization& a, const Factorization& b);

/// den = c * b^x with b maximal.
struct PowerSplit {
  Natural c;
  Natural b;
  std::uint32_t x = 1;
};

PowerSplit xth_power_split(const Natural& den, std::uint32_t x);

/// Factored form of the split: exponent e becomes (e mod x) in c and
/// floor(e / x) in b.
std::pair<Factorization, Factorization> xth_power_split(const Factorization& den, std::uint32_t x);

/// Smallest r with den | r^x: each exponent e becomes ceil(e / x).
Factorization xth_root_ceiling(const Factorization& den, std::uint32_t x);

}  // namespace abundancy
