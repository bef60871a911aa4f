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

#include <cstdint>
#include <string_view>
#include <vector>

#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

namespace abundancy {

/// n = a * b where a is the largest divisor of n coprime to m and every
/// prime of b divides m.
struct CoprimeSplit {
  Natural a;
  Natural b;
};

CoprimeSplit coprime_split(const Natural& n, const Natural& m);

/// Π p^x / (p^x - 1) over the distinct primes of m; 1 for m = 1.
PositiveRational limit_prime_product(const Factorization& m, std::uint32_t x);

struct LimitSpec {
  Natural n;
  Natural m;
  std::uint32_t x = 1;
};

struct LimitResult {
  PositiveRational value;
  /// Set when m = 1: the sequence n * m^k is constant and the value is I(x, n).
  bool degenerate = false;
};

/// Limit of I(x, n * m^k) as k grows.
LimitResult limit_general(const LimitSpec& query);

enum class RatioInvariance { kHolds, kFails, kNotApplicable };

std::string_view to_string(RatioInvariance r);

/// Compares I(x, n1 m^k) / I(x, n1 m^j) against the same ratio for n2.
/// Requires both arguments to share the same m-part; otherwise the
/// hypothesis does not apply and kNotApplicable is returned.
RatioInvariance ratio_invariance_check(const Natural& n1, const Natural& n2, const Natural& m,
                                       std::uint32_t k, std::uint32_t j, std::uint32_t x);

struct EvenPerfectTerm {
  Natural p;
  Natural n;  // 2^{p-1} (2^p - 1)
  PositiveRational index;
  bool mersenne_prime = false;  // 2^p - 1 is prime
};

struct EvenPerfectOptions {
  bool mersenne_only = false;
  std::uint32_t max_count = 12;
};

/// First `count` terms 2^{p-1}(2^p - 1) indexed by the ascending primes p
/// (or only those p with 2^p - 1 prime when `mersenne_only` is set).
std::vector<EvenPerfectTerm> even_perfect_sequence(std::uint32_t count, std::uint32_t x,
                                                   const EvenPerfectOptions& options = {});

/// 2^x / (2^x - 1), the limit of the even-perfect-form sequence.
PositiveRational even_perfect_limit(std::uint32_t x);

}  // namespace abundancy
