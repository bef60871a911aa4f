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

#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

namespace abundancy {

/// σ_x(p^k) = (p^{x(k+1)} - 1) / (p^x - 1).
Natural sigma_prime_power(const Natural& p, std::uint32_t k, std::uint32_t x);

/// Sum of d^x over the divisors of n, via the per-prime geometric closed
/// form. Never enumerates divisors.
Natural sigma_x(const Factorization& n, std::uint32_t x);
Natural sigma_x(const Natural& n, std::uint32_t x);

/// The x-th abundancy index σ_x(n) / n^x in lowest terms.
PositiveRational abundancy(std::uint32_t x, const Factorization& n);
PositiveRational abundancy(std::uint32_t x, const Natural& n);

enum class DeficiencyClass { kDeficient, kPerfect, kAbundant };

/// Classical comparison of σ(n) against 2n.
DeficiencyClass deficiency_class(const Natural& n);

std::string_view to_string(DeficiencyClass c);

}  // namespace abundancy
