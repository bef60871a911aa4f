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
#include <utility>

#include "abundancy/certificate.hpp"
#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/outcome.hpp"
#include "abundancy/rational.hpp"

namespace abundancy {

// Outlaw criteria -----------------------------------------------------------
//
// Each check_* returns a certificate when its sufficient condition holds and
// a reason otherwise. Indices j are zero-based positions in a factorization.

/// k/m^x is an outlaw when gcd(k, m^x) = 1 and m^x < k < σ_x(m).
/// The upper bound is strict: at k = σ_x(m) the fraction is I(x, m) itself.
Outcome<Certificate> check_theorem1(const Natural& k, const Natural& m, std::uint32_t x);

/// t p_j^x < σ_x(n / p_j^{k_j}); equivalent to (σ_x(n)+t)/n^x < I(x, p_j n).
bool lemma2_bound(const Factorization& n, std::size_t j, const Natural& t, std::uint32_t x);

/// Outlaw test for (σ_x(n)+t)/n^x. Searches ascending j, then ascending
/// d > 1 with d^x | σ_x(p_j^{k_j}); case 2 is preferred when both hold.
Outcome<Certificate> check_theorem2(const Factorization& n, const Natural& t, std::uint32_t x,
                                    std::uint64_t divisor_cap = 100'000);

/// σ_x(p_j^{k_j+1}) / (σ_x(p_j^{k_j+1}) - 1), which equals I(x, p_j n) / I(x, n).
PositiveRational lemma1_ratio(const Factorization& n, std::size_t j, std::uint32_t x);

/// Outlaw test for k/(l m^x) over divisors n^x of l m^x (smallest n first).
/// The product term is σ_x(n) (l m^x / n^x), integral for every such n.
Outcome<Certificate> check_theorem3(const Natural& k, const Natural& l, const Natural& m, std::uint32_t x,
                                    std::uint64_t divisor_cap = 100'000);

// Index propagation ---------------------------------------------------------

struct DerivedIndex {
  PositiveRational value;
  Natural witness;
};

/// From q = I(x, witness) and a divisor d^x of den(q) with I(x, p_i d) > q for
/// every prime p_i of d: (d^x / σ_x(d)) q = I(x, witness / d).
Outcome<DerivedIndex> derive_index_theoremC(const PositiveRational& q, std::uint32_t x, const Natural& witness,
                                            const Factorization& d);

/// (σ_x(n)+t)/n^x, the index implied by (σ_x(mn)+σ_x(m)t)/(mn)^x when the
/// latter is reduced, gcd(m, n) = 1, and I(x, p_i m) exceeds it for all p_i | m.
Outcome<PositiveRational> corollary_transform(const Factorization& m, const Natural& n, const Natural& t,
                                              std::uint32_t x);

/// (σ_x(mn)+σ_x(m)t)/(mn)^x, the fraction the corollary starts from.
PositiveRational corollary_source(const Factorization& m, const Natural& n, const Natural& t, std::uint32_t x);

struct PrimePowerCross {
  PositiveRational value;           // I(x, p) = (1 + p^x)/p^x
  Certificate outlaw_at_1;          // T1 with m = p^x, exponent 1
  Certificate reduction;            // the same fact as a prime-power certificate
  Natural index_witness;            // p, at exponent x
};

/// Throws std::domain_error unless p is prime and x > 1.
PrimePowerCross prime_power_cross(const Natural& p, std::uint32_t x);

// Odd perfect criterion -----------------------------------------------------

/// 2 p^α (p-1) / (p^{α+1} - 1). Requires p prime and p ≡ α ≡ 1 (mod 4).
PositiveRational odd_perfect_target(const Natural& p, const Natural& alpha);

struct OddPerfectCheck {
  PositiveRational target;
  PositiveRational index;  // I(1, n)
  bool index_matches = false;
  bool p_divides_n = false;
  /// I(1, n) equals the target and p does not divide n.
  bool criterion_met = false;
};

OddPerfectCheck odd_perfect_check(const Natural& n, const Natural& p, const Natural& alpha);

/// (p, α) with small p (below prime_limit) and α in {1, 5, 9, 13} whose
/// target equals q, if any.
std::optional<std::pair<Natural, Natural>> match_odd_perfect_target(const PositiveRational& q,
                                                                    std::uint64_t prime_limit = 10'000);

// Pipeline ------------------------------------------------------------------

/// The theorem stages of classify without the witness search: T1 when the
/// denominator is an x-th power, T2 when additionally the numerator is
/// σ_x(m) + t with t <= t_max, then T3. Certificates are re-verified.
Outcome<Certificate> certify_outlaw(const PositiveRational& q, std::uint32_t x, const EffortBudget& effort = {});

/// Witness search first (an index verdict short-circuits), then
/// certify_outlaw, else Unknown. Throws std::domain_error when q <= 1.
Classification classify(const PositiveRational& q, std::uint32_t x, const EffortBudget& effort = {});

}  // namespace abundancy
