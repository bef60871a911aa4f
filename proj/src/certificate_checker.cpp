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

// Independent re-verification of outlaw certificates. Everything here is
// recomputed from the raw parameters: σ_x is summed term by term rather than
// taken from the closed form, and no predicate from the classifier is reused.

#include <string>

#include "abundancy/certificate.hpp"
#include "abundancy/factorization.hpp"

namespace abundancy {
namespace {

// Σ_{i=0}^{k} p^{xi}, one term at a time.
Natural summed_prime_power_sigma(const Natural& p, std::uint32_t k, std::uint32_t x) {
  const Natural px = pow(p, x);
  Natural term(1);
  Natural sum(1);
  for (std::uint32_t i = 1; i <= k; ++i) {
    term *= px;
    sum += term;
  }
  return sum;
}

Natural summed_sigma(const Natural& n, std::uint32_t x) {
  Natural s(1);
  const Factorization f = factorize(n);
  for (const auto& [p, k] : f.factors()) s *= summed_prime_power_sigma(p, k, x);
  return s;
}

// I(x, n) compared as a cross-multiplied fraction.
struct Fraction {
  Natural num;
  Natural den;
};

Fraction index_of(const Natural& n, std::uint32_t x) { return {summed_sigma(n, x), pow(n, x)}; }

bool less(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

Fraction as_fraction(const PositiveRational& q) { return {q.num(), q.den()}; }

Fraction product(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }

std::string str(const Natural& n) { return n.to_string(); }

Verification check_t1(const PositiveRational& q, std::uint32_t x, const T1Certificate& c) {
  if (c.m.is_zero()) return Verification::fail("m must be positive");
  const Natural mx = pow(c.m, x);
  if (q.den() != mx) return Verification::fail("denominator " + str(q.den()) + " is not m^x = " + str(mx));
  const Natural& k = q.num();
  if (!gcd(k, mx).is_one()) return Verification::fail("gcd(k, m^x) != 1");
  if (!(mx < k)) return Verification::fail("k <= m^x");
  const Natural s = summed_sigma(c.m, x);
  if (!(k < s)) return Verification::fail("k = " + str(k) + " is not below sigma_x(m) = " + str(s));
  return Verification::pass();
}

Verification check_t2(const PositiveRational& q, std::uint32_t x, const T2Certificate& c) {
  if (c.n.is_zero() || c.n.is_one()) return Verification::fail("n must exceed 1");
  if (c.t.is_zero()) return Verification::fail("t must be positive");
  const auto nf = factorize(c.n);
  if (c.j >= nf.size() || nf[c.j].prime != c.p) {
    return Verification::fail("p = " + str(c.p) + " is not the prime at index j of n");
  }
  const std::uint32_t kj = nf[c.j].exponent;
  const Natural nx = pow(c.n, x);
  const Natural numer = summed_sigma(c.n, x) + c.t;
  if (!gcd(numer, nx).is_one()) return Verification::fail("sigma_x(n)+t and n^x are not coprime");
  if (q.num() != numer || q.den() != nx) return Verification::fail("q is not (sigma_x(n)+t)/n^x");

  const Natural pjk = pow(c.p, kj);
  const Natural rest = exact_div(c.n, pjk);
  if (!(c.t * pow(c.p, x) < summed_sigma(rest, x))) {
    return Verification::fail("t * p_j^x is not below sigma_x(n / p_j^k_j)");
  }
  if (!(Natural(1) < c.d)) return Verification::fail("d must exceed 1");
  const Natural dx = pow(c.d, x);
  const Natural sp = summed_prime_power_sigma(c.p, kj, x);
  if (!divides(dx, sp)) return Verification::fail("d^x does not divide sigma_x(p_j^k_j)");

  if (c.case_id == 1) {
    if (!gcd(dx, c.t).is_one()) return Verification::fail("case 1: gcd(d^x, t) != 1");
    const Fraction lhs = product(index_of(pjk, x), index_of(c.d, x));
    if (!less(as_fraction(q), lhs)) return Verification::fail("case 1: I(x,p_j^k_j) I(x,d) does not exceed q");
    return Verification::pass();
  }
  if (c.case_id == 2) {
    if (!gcd(dx, nx * c.t).is_one()) return Verification::fail("case 2: gcd(d^x, n^x t) != 1");
    return Verification::pass();
  }
  return Verification::fail("unknown case " + std::to_string(c.case_id));
}

Verification check_t3(const PositiveRational& q, std::uint32_t x, const T3Certificate& c) {
  if (c.l.is_zero() || c.m.is_zero()) return Verification::fail("l and m must be positive");
  if (c.n.is_zero() || c.n.is_one()) return Verification::fail("n must exceed 1");
  const Natural big_l = c.l * pow(c.m, x);
  if (q.den() != big_l) return Verification::fail("denominator is not l m^x");
  const Natural& k = q.num();
  if (!gcd(k, big_l).is_one()) return Verification::fail("gcd(k, l m^x) != 1");
  if (!(big_l < k)) return Verification::fail("fraction does not exceed 1");
  const Natural nx = pow(c.n, x);
  if (!divides(nx, big_l)) return Verification::fail("n^x does not divide l m^x");

  const auto nf = factorize(c.n);
  for (const auto& f : nf.factors()) {
    if (!less(as_fraction(q), index_of(c.n * f.prime, x))) {
      return Verification::fail("q is not below I(x, p n) for p = " + str(f.prime));
    }
  }
  if (c.j >= nf.size() || nf[c.j].prime != c.p) {
    return Verification::fail("p = " + str(c.p) + " is not the prime at index j of n");
  }
  const Natural product_term = summed_sigma(c.n, x) * exact_div(big_l, nx);
  const Natural dx = pow(c.d, x);
  if (c.d.is_zero() || !divides(dx, product_term)) {
    return Verification::fail("d^x does not divide sigma_x(n) l m^x / n^x");
  }
  if (!gcd(dx, k).is_one()) return Verification::fail("gcd(d^x, k) != 1");
  const Natural s_next = summed_prime_power_sigma(c.p, nf[c.j].exponent + 1, x);
  // I(x,d) >= s/(s-1)  <=>  σ_x(d) (s-1) >= d^x s
  if (summed_sigma(c.d, x) * (s_next - Natural(1)) < dx * s_next) {
    return Verification::fail("I(x,d) is below the ratio bound for p_j");
  }
  return Verification::pass();
}

Verification check_prime_power(const PositiveRational& q, std::uint32_t x, const PrimePowerCertificate& c) {
  if (x != 1) return Verification::fail("prime-power reduction certifies exponent 1 only");
  if (c.x_src < 2) return Verification::fail("source exponent must exceed 1");
  if (!is_probable_prime(c.p)) return Verification::fail(str(c.p) + " is not prime");
  const Natural ps = pow(c.p, c.x_src);
  if (q.num() != ps + Natural(1) || q.den() != ps) return Verification::fail("q is not (1 + p^s)/p^s");
  // Exponent-1 outlaw through m = p^s: p^s < 1 + p^s < σ(p^s).
  return check_t1(q, 1, T1Certificate{ps});
}

}  // namespace

std::string_view theorem_name(const Certificate& cert) {
  struct Visitor {
    std::string_view operator()(const T1Certificate&) const { return "T1"; }
    std::string_view operator()(const T2Certificate&) const { return "T2"; }
    std::string_view operator()(const T3Certificate&) const { return "T3"; }
    std::string_view operator()(const PrimePowerCertificate&) const { return "PrimePowerX"; }
  };
  return std::visit(Visitor{}, cert);
}

std::string_view verdict_name(const Verdict& verdict) {
  struct Visitor {
    std::string_view operator()(const IndexVerdict&) const { return "index"; }
    std::string_view operator()(const OutlawVerdict&) const { return "outlaw"; }
    std::string_view operator()(const UnknownVerdict&) const { return "unknown"; }
  };
  return std::visit(Visitor{}, verdict);
}

Verification verify_certificate(const PositiveRational& q, std::uint32_t x, const Certificate& cert) {
  if (x == 0) return Verification::fail("exponent must be positive");
  if (!q.greater_than_one()) return Verification::fail("q must exceed 1");
  struct Visitor {
    const PositiveRational& q;
    std::uint32_t x;
    Verification operator()(const T1Certificate& c) const { return check_t1(q, x, c); }
    Verification operator()(const T2Certificate& c) const { return check_t2(q, x, c); }
    Verification operator()(const T3Certificate& c) const { return check_t3(q, x, c); }
    Verification operator()(const PrimePowerCertificate& c) const { return check_prime_power(q, x, c); }
  };
  return std::visit(Visitor{q, x}, cert);
}

}  // namespace abundancy
