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

#include "abundancy/classifier.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "abundancy/divisor_core.hpp"
#include "abundancy/oracle.hpp"

namespace abundancy {
namespace {

void require_exponent(std::uint32_t x) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
}

// Factorization of σ_x(n) as a product of factored per-prime terms.
class SigmaFactorizer {
 public:
  explicit SigmaFactorizer(std::uint32_t x) : x_(x) {}

  const Factorization& prime_power_term(const Natural& p, std::uint32_t k) {
    auto key = std::make_pair(p, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), factorize(sigma_prime_power(p, k, x_))).first;
    return it->second;
  }

  Factorization sigma(const Factorization& n) {
    Factorization out;
    for (const auto& [p, k] : n.factors()) out = multiply(out, prime_power_term(p, k));
    return out;
  }

 private:
  std::uint32_t x_;
  std::map<std::pair<Natural, std::uint32_t>, Factorization> cache_;
};

Certificate verified(const PositiveRational& q, std::uint32_t x, Certificate cert) {
  if (const Verification v = verify_certificate(q, x, cert); !v) {
    throw std::logic_error("certificate " + std::string(theorem_name(cert)) + " for " + q.to_string() +
                           " failed independent re-verification: " + v.reason);
  }
  return cert;
}

}  // namespace

Outcome<Certificate> check_theorem1(const Natural& k, const Natural& m, std::uint32_t x) {
  require_exponent(x);
  if (k.is_zero() || m.is_zero()) return Outcome<Certificate>::failure("k and m must be positive");
  const Natural mx = pow(m, x);
  if (!gcd(k, mx).is_one()) return Outcome<Certificate>::failure("gcd(k, m^x) != 1");
  if (!(mx < k)) return Outcome<Certificate>::failure("k <= m^x");
  const Natural s = sigma_x(m, x);
  if (k == s) {
    return Outcome<Certificate>::failure("boundary case k = sigma_x(m) = " + s.to_string() +
                                         ": k/m^x = I(x, m) is an index, not an outlaw");
  }
  if (s < k) return Outcome<Certificate>::failure("k > sigma_x(m) = " + s.to_string());
  return Outcome<Certificate>::success(T1Certificate{m});
}

bool lemma2_bound(const Factorization& n, std::size_t j, const Natural& t, std::uint32_t x) {
  require_exponent(x);
  if (j >= n.size()) throw std::out_of_range("lemma2_bound: prime index out of range");
  if (t.is_zero()) throw std::domain_error("lemma2_bound: t must be positive");
  return t * pow(n[j].prime, x) < sigma_x(n.without(j), x);
}

Outcome<Certificate> check_theorem2(const Factorization& n, const Natural& t, std::uint32_t x,
                                    std::uint64_t divisor_cap) {
  using Result = Outcome<Certificate>;
  require_exponent(x);
  if (t.is_zero()) return Result::failure("t must be positive");
  if (n.empty()) return Result::failure("n must exceed 1");

  const Natural nv = n.value();
  const Natural nx = pow(nv, x);
  const Natural numer = sigma_x(n, x) + t;
  if (!gcd(numer, nx).is_one()) return Result::failure("precondition: gcd(sigma_x(n)+t, n^x) != 1");
  const PositiveRational q(numer, nx);

  SigmaFactorizer sigmas(x);
  bool any_bound = false;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (!lemma2_bound(n, j, t, x)) continue;
    any_bound = true;
    const auto& [p, k] = n[j];
    const PositiveRational prime_power_index = abundancy(x, n.component(j));
    const auto [c, b] = xth_power_split(sigmas.prime_power_term(p, k), x);
    const auto candidates = divisor_factorizations(b, divisor_cap);
    if (!candidates) return Result::failure("divisor enumeration cap reached");
    for (const Factorization& df : *candidates) {
      if (df.empty()) continue;  // d = 1
      const Natural d = df.value();
      const Natural dx = pow(d, x);
      if (gcd(dx, nx * t).is_one()) return Result::success(T2Certificate{nv, t, j, p, d, 2});
      if (gcd(dx, t).is_one() && q < prime_power_index * abundancy(x, df)) {
        return Result::success(T2Certificate{nv, t, j, p, d, 1});
      }
    }
  }
  if (!any_bound) return Result::failure("no prime p_j of n satisfies t p_j^x < sigma_x(n / p_j^k_j)");
  return Result::failure("no divisor d^x > 1 of sigma_x(p_j^k_j) satisfies either case");
}

PositiveRational lemma1_ratio(const Factorization& n, std::size_t j, std::uint32_t x) {
  require_exponent(x);
  if (j >= n.size()) throw std::out_of_range("lemma1_ratio: prime index out of range");
  const Natural s = sigma_prime_power(n[j].prime, n[j].exponent + 1, x);
  return PositiveRational(s, s - Natural(1));
}

Outcome<Certificate> check_theorem3(const Natural& k, const Natural& l, const Natural& m, std::uint32_t x,
                                    std::uint64_t divisor_cap) {
  using Result = Outcome<Certificate>;
  require_exponent(x);
  if (k.is_zero() || l.is_zero() || m.is_zero()) return Result::failure("k, l and m must be positive");
  const Natural big_l = l * pow(m, x);
  if (!gcd(k, big_l).is_one()) return Result::failure("precondition: gcd(k, l m^x) != 1");
  if (!(big_l < k)) return Result::failure("precondition: k/(l m^x) must exceed 1");
  const PositiveRational q(k, big_l);

  const Factorization lf = multiply(factorize(l), factorize(m).power(x));
  const auto [unused_c, root] = xth_power_split(lf, x);
  const auto candidates = divisor_factorizations(root, divisor_cap);
  if (!candidates) return Result::failure("divisor enumeration cap reached");
  std::uint64_t budget = divisor_cap - std::min<std::uint64_t>(divisor_cap, candidates->size());

  SigmaFactorizer sigmas(x);
  bool any_condition1 = false;
  for (const Factorization& nf : *candidates) {
    if (nf.empty()) continue;  // n = 1 has no prime to bound against
    bool condition1 = true;
    for (const auto& f : nf.factors()) {
      if (!(q < abundancy(x, nf.times_prime(f.prime)))) {
        condition1 = false;
        break;
      }
    }
    if (!condition1) continue;
    any_condition1 = true;

    std::vector<PositiveRational> ratios;
    for (std::size_t j = 0; j < nf.size(); ++j) ratios.push_back(lemma1_ratio(nf, j, x));

    const Factorization product_term = multiply(sigmas.sigma(nf), quotient(lf, nf.power(x)));
    const auto [c2, b2] = xth_power_split(product_term, x);
    const auto ds = divisor_factorizations(b2, budget);
    if (!ds) return Result::failure("divisor enumeration cap reached");
    budget -= ds->size();
    for (const Factorization& df : *ds) {
      if (df.empty()) continue;  // I(x, 1) = 1 never meets a ratio bound
      const Natural d = df.value();
      if (!gcd(d, k).is_one()) continue;
      const PositiveRational index_d = abundancy(x, df);
      for (std::size_t j = 0; j < ratios.size(); ++j) {
        if (index_d >= ratios[j]) {
          return Result::success(T3Certificate{nf.value(), l, m, j, nf[j].prime, d});
        }
      }
    }
  }
  if (!any_condition1) return Result::failure("no divisor n^x of l m^x has q < I(x, p_i n) for all p_i | n");
  return Result::failure("no divisor d^x of sigma_x(n) l m^x / n^x meets the ratio bound");
}

Outcome<DerivedIndex> derive_index_theoremC(const PositiveRational& q, std::uint32_t x, const Natural& witness,
                                            const Factorization& d) {
  using Result = Outcome<DerivedIndex>;
  require_exponent(x);
  if (witness.is_zero()) return Result::failure("witness must be positive");
  if (abundancy(x, witness) != q) return Result::failure("I(x, witness) != q");
  if (!q.greater_than_one()) return Result::failure("q must exceed 1");
  if (d.empty()) return Result::success(DerivedIndex{q, witness});

  const Natural dv = d.value();
  const Natural dx = pow(dv, x);
  if (!divides(dx, q.den())) return Result::failure("d^x does not divide the denominator of q");
  for (const auto& f : d.factors()) {
    if (!(q < abundancy(x, d.times_prime(f.prime)))) {
      return Result::failure("I(x, p d) does not exceed q for p = " + f.prime.to_string());
    }
  }
  if (!divides(dv, witness)) {
    throw std::logic_error("divisor propagation: d = " + dv.to_string() + " does not divide witness " +
                           witness.to_string());
  }
  return Result::success(DerivedIndex{PositiveRational(dx, sigma_x(d, x)) * q, exact_div(witness, dv)});
}

PositiveRational corollary_source(const Factorization& m, const Natural& n, const Natural& t, std::uint32_t x) {
  require_exponent(x);
  const Natural mn = m.value() * n;
  return PositiveRational(sigma_x(mn, x) + sigma_x(m, x) * t, pow(mn, x));
}

Outcome<PositiveRational> corollary_transform(const Factorization& m, const Natural& n, const Natural& t,
                                              std::uint32_t x) {
  using Result = Outcome<PositiveRational>;
  require_exponent(x);
  if (n.is_zero() || t.is_zero()) return Result::failure("n and t must be positive");
  const Natural mv = m.value();
  if (!gcd(mv, n).is_one()) return Result::failure("gcd(m, n) != 1");

  const Natural mn = mv * n;
  const Natural numer = sigma_x(mn, x) + sigma_x(m, x) * t;
  const Natural denom = pow(mn, x);
  if (!gcd(numer, denom).is_one()) return Result::failure("source fraction is not in simplest terms");
  const PositiveRational source(numer, denom);
  for (const auto& f : m.factors()) {
    if (!(source < abundancy(x, m.times_prime(f.prime)))) {
      return Result::failure("I(x, p m) does not exceed the source fraction for p = " + f.prime.to_string());
    }
  }
  return Result::success(PositiveRational(sigma_x(n, x) + t, pow(n, x)));
}

PrimePowerCross prime_power_cross(const Natural& p, std::uint32_t x) {
  if (x <= 1) throw std::domain_error("prime_power_cross: x must exceed 1 (I(1, p) is an index)");
  if (!is_probable_prime(p)) throw std::domain_error("prime_power_cross: " + p.to_string() + " is not prime");
  const Natural px = pow(p, x);
  const PositiveRational value(px + Natural(1), px);
  return PrimePowerCross{value, verified(value, 1, T1Certificate{px}),
                         verified(value, 1, PrimePowerCertificate{p, x}), p};
}

PositiveRational odd_perfect_target(const Natural& p, const Natural& alpha) {
  if (!is_probable_prime(p)) throw std::domain_error("odd_perfect_target: " + p.to_string() + " is not prime");
  if (p % Natural(4) != Natural(1)) throw std::domain_error("odd_perfect_target: p must be 1 mod 4");
  if (alpha % Natural(4) != Natural(1)) throw std::domain_error("odd_perfect_target: alpha must be 1 mod 4");
  const unsigned long a = alpha.to_u64();
  const Natural pa = pow(p, a);
  return PositiveRational(Natural(2) * pa * (p - Natural(1)), pa * p - Natural(1));
}

OddPerfectCheck odd_perfect_check(const Natural& n, const Natural& p, const Natural& alpha) {
  OddPerfectCheck check{odd_perfect_target(p, alpha), abundancy(1, n)};
  check.index_matches = check.index == check.target;
  check.p_divides_n = divides(p, n);
  check.criterion_met = check.index_matches && !check.p_divides_n;
  return check;
}

std::optional<std::pair<Natural, Natural>> match_odd_perfect_target(const PositiveRational& q,
                                                                    std::uint64_t prime_limit) {
  if (!(q < PositiveRational(Natural(2)))) return std::nullopt;
  for (std::uint64_t p = 5; p <= prime_limit; p += 4) {
    const Natural pn(p);
    if (!is_probable_prime(pn)) continue;
    for (const unsigned alpha : {1u, 5u, 9u, 13u}) {
      if (odd_perfect_target(pn, Natural(alpha)) == q) return std::make_pair(pn, Natural(alpha));
    }
  }
  return std::nullopt;
}

Outcome<Certificate> certify_outlaw(const PositiveRational& q, std::uint32_t x, const EffortBudget& effort) {
  require_exponent(x);
  if (!q.greater_than_one()) throw std::domain_error("certify_outlaw: q must exceed 1");
  const auto [cf, bf] = xth_power_split(factorize(q.den()), x);
  const Natural& k = q.num();
  std::string reasons;

  if (cf.empty()) {
    const Natural m = bf.value();
    const auto t1 = check_theorem1(k, m, x);
    if (t1) return Outcome<Certificate>::success(verified(q, x, *t1));
    reasons += "T1: " + t1.reason();

    const Natural s = sigma_x(bf, x);
    if (s < k) {
      const Natural t = k - s;
      if (t <= Natural(effort.t_max)) {
        const auto t2 = check_theorem2(bf, t, x, effort.divisor_enum_cap);
        if (t2) return Outcome<Certificate>::success(verified(q, x, *t2));
        reasons += "; T2: " + t2.reason();
      } else {
        reasons += "; T2: t = " + t.to_string() + " exceeds t_max";
      }
    } else {
      reasons += "; T2: numerator does not exceed sigma_x(m)";
    }
    reasons += "; ";
  } else {
    reasons += "T1/T2: denominator is not an x-th power; ";
  }

  const auto t3 = check_theorem3(k, cf.value(), bf.value(), x, effort.divisor_enum_cap);
  if (t3) return Outcome<Certificate>::success(verified(q, x, *t3));
  reasons += "T3: " + t3.reason();
  return Outcome<Certificate>::failure(reasons);
}

namespace {

constexpr std::size_t kMaxImplied = 16;

void record_implied(Classification& result) {
  const Natural& w = std::get<IndexVerdict>(result.verdict).witness;
  const std::uint32_t x = result.x;
  const PositiveRational& q = result.q;
  const auto [cf, bf] = xth_power_split(factorize(q.den()), x);
  const auto ds = divisor_factorizations(bf, result.effort.divisor_enum_cap);
  if (!ds) return;

  for (const Factorization& d : *ds) {
    if (result.implied.size() >= kMaxImplied) return;
    if (d.empty()) continue;
    if (const auto derived = derive_index_theoremC(q, x, w, d); derived && !derived->value.is_one()) {
      result.implied.push_back({derived->value, derived->witness, "divisor-propagation"});
    }
  }

  // The corollary edge: q = (σ_x(mn) + σ_x(m) t)/(mn)^x with mn the x-th
  // root of the denominator.
  if (!cf.empty()) return;
  const Natural s_total = sigma_x(bf, x);
  if (!(s_total < q.num())) return;
  const Natural excess = q.num() - s_total;
  for (const Factorization& mf : *ds) {
    if (result.implied.size() >= kMaxImplied) return;
    if (mf.empty() || mf == bf) continue;
    const Factorization nf = quotient(bf, mf);
    if (!gcd_fact(mf, nf).empty()) continue;
    const Natural sm = sigma_x(mf, x);
    if (!divides(sm, excess)) continue;
    const Natural t = exact_div(excess, sm);
    const auto target = corollary_transform(mf, nf.value(), t, x);
    if (!target) continue;
    const Natural small_witness = exact_div(w, mf.value());
    if (abundancy(x, small_witness) != *target) {
      throw std::logic_error("corollary edge from " + q.to_string() + " produced a non-index " +
                             target->to_string());
    }
    result.implied.push_back({*target, small_witness, "corollary"});
  }
}

}  // namespace

Classification classify(const PositiveRational& q, std::uint32_t x, const EffortBudget& effort) {
  require_exponent(x);
  if (!q.greater_than_one()) throw std::domain_error("classify: q = " + q.to_string() + " must exceed 1");

  Classification result;
  result.q = q;
  result.x = x;
  result.effort = effort;

  const auto [cf, bf] = xth_power_split(factorize(q.den()), x);
  if (cf.empty() && sigma_x(bf, x) == q.num()) {
    result.notes.push_back("numerator equals sigma_x(m) for m = " + bf.value().to_string() +
                           ": the inclusive bound k <= sigma_x(m) would wrongly certify I(x, m) as an outlaw");
  }

  const auto search = oracle::search_witness(q, x, effort.witness_bound, {.pruned = true, .threads = effort.threads});
  if (search.witness) {
    result.verdict = IndexVerdict{*search.witness};
    record_implied(result);
    return result;
  }

  const auto outlaw = certify_outlaw(q, x, effort);
  if (outlaw) {
    result.verdict = OutlawVerdict{*outlaw};
    return result;
  }

  result.verdict = UnknownVerdict{};
  result.notes.push_back("no witness up to " + std::to_string(effort.witness_bound) + "; " + outlaw.reason());
  if (x == 1) {
    if (const auto match = match_odd_perfect_target(q)) {
      result.notes.push_back("q equals the odd-perfect target 2p^a(p-1)/(p^(a+1)-1) for p = " +
                             match->first.to_string() + ", a = " + match->second.to_string() +
                             ": a witness not divisible by p would imply an odd perfect number");
    }
  }
  return result;
}

}  // namespace abundancy
