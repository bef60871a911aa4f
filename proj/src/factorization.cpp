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

#include "abundancy/factorization.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace abundancy {

struct FactorizationBuilder {
  static Factorization build(std::vector<PrimePower> factors) { return Factorization(std::move(factors)); }
};

namespace {

constexpr std::uint32_t kDefaultTrialBound = 1'000'000;

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& default_trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kDefaultTrialBound);
  return primes;
}

using Accumulator = std::map<mpz_class, std::uint32_t>;

mpz_class rho_step(const mpz_class& y, const mpz_class& c, const mpz_class& n) {
  mpz_class r = y * y + c;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Pollard-Brent rho. n is odd, composite, and not a perfect square.
mpz_class brent_rho(const mpz_class& n, std::uint64_t seed) {
  constexpr unsigned long kBatch = 128;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const mpz_class c = static_cast<unsigned long>(seed + attempt);
    mpz_class y = 2;
    mpz_class x;
    mpz_class ys;
    mpz_class q = 1;
    mpz_class g = 1;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = rho_step(y, c, n);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = rho_step(y, c, n);
          mpz_class diff = abs(x - y);
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched product collapsed; backtrack one step at a time.
      do {
        ys = rho_step(ys, c, n);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

bool mpz_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

void split_large(const mpz_class& n, std::uint32_t multiplicity, std::uint64_t seed, Accumulator& out) {
  if (n == 1) return;
  if (mpz_probable_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_large(root, multiplicity * 2, seed, out);
    return;
  }
  if (mpz_even_p(n.get_mpz_t()) != 0) {
    out[mpz_class(2)] += multiplicity;
    split_large(n / 2, multiplicity, seed, out);
    return;
  }
  const mpz_class f = brent_rho(n, seed);
  split_large(f, multiplicity, seed, out);
  split_large(n / f, multiplicity, seed, out);
}

// Returns the cofactor left after trial division; `exhausted` is set when
// every prime up to sqrt(cofactor) was tried (so the cofactor is 1 or prime).
mpz_class trial_divide(mpz_class m, const std::vector<std::uint32_t>& primes, std::uint32_t bound,
                       Accumulator& out, bool& exhausted) {
  exhausted = false;
  std::size_t i = 0;
  for (; i < primes.size() && primes[i] <= bound && !m.fits_ulong_p(); ++i) {
    const std::uint32_t p = primes[i];
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    std::uint32_t e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0);
    out[mpz_class(static_cast<unsigned long>(p))] += e;
  }
  if (!m.fits_ulong_p()) return m;

  std::uint64_t small = m.get_ui();
  for (; i < primes.size() && primes[i] <= bound; ++i) {
    const std::uint64_t p = primes[i];
    if (static_cast<unsigned __int128>(p) * p > small) {
      exhausted = true;
      break;
    }
    if (small % p != 0) continue;
    std::uint32_t e = 0;
    do {
      small /= p;
      ++e;
    } while (small % p == 0);
    out[mpz_class(static_cast<unsigned long>(p))] += e;
  }
  return mpz_class(static_cast<unsigned long>(small));
}

}  // namespace

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent == 0) throw std::domain_error("Factorization: zero exponent");
    if (!is_probable_prime(factors[i].prime)) {
      throw std::domain_error("Factorization: " + factors[i].prime.to_string() + " is not prime");
    }
    if (i > 0 && !(factors[i - 1].prime < factors[i].prime)) {
      throw std::domain_error("Factorization: primes must be strictly increasing");
    }
  }
  return Factorization(std::move(factors));
}

Factorization Factorization::prime_power(Natural p, std::uint32_t k) {
  if (k == 0) return Factorization();
  return Factorization({PrimePower{std::move(p), k}});
}

Natural Factorization::value() const {
  Natural v(1);
  for (const auto& [p, k] : factors_) v *= pow(p, k);
  return v;
}

std::uint32_t Factorization::exponent_of(const Natural& p) const {
  for (const auto& f : factors_) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

std::uint64_t Factorization::divisor_count() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (const auto& f : factors_) {
    const std::uint64_t term = static_cast<std::uint64_t>(f.exponent) + 1;
    if (count > kMax / term) return kMax;
    count *= term;
  }
  return count;
}

Factorization Factorization::without(std::size_t j) const {
  std::vector<PrimePower> rest;
  rest.reserve(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != j) rest.push_back(factors_[i]);
  }
  return Factorization(std::move(rest));
}

Factorization Factorization::component(std::size_t j) const {
  return Factorization({factors_.at(j)});
}

Factorization Factorization::times_prime(const Natural& p) const {
  std::vector<PrimePower> out = factors_;
  auto it = std::lower_bound(out.begin(), out.end(), p,
                             [](const PrimePower& f, const Natural& q) { return f.prime < q; });
  if (it != out.end() && it->prime == p) {
    ++it->exponent;
  } else {
    out.insert(it, PrimePower{p, 1});
  }
  return Factorization(std::move(out));
}

Factorization Factorization::power(std::uint32_t x) const {
  std::vector<PrimePower> out = factors_;
  for (auto& f : out) f.exponent *= x;
  if (x == 0) out.clear();
  return Factorization(std::move(out));
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << " * ";
    os << factors_[i].prime;
    if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

bool is_probable_prime(const Natural& n) { return mpz_probable_prime(n.mpz()); }

Factorization factorize(const Natural& n, const FactorizeOptions& options) {
  if (n.is_zero()) throw std::domain_error("factorize: 0 has no prime factorization");
  if (n.is_one()) return Factorization();

  std::vector<std::uint32_t> custom;
  const std::vector<std::uint32_t>* primes = &default_trial_primes();
  if (options.trial_bound > kDefaultTrialBound) {
    custom = primes_up_to(options.trial_bound);
    primes = &custom;
  }

  Accumulator acc;
  bool exhausted = false;
  const mpz_class rest = trial_divide(n.mpz(), *primes, options.trial_bound, acc, exhausted);
  if (rest != 1) {
    if (exhausted) {
      acc[rest] += 1;
    } else {
      split_large(rest, 1, options.rho_seed, acc);
    }
  }

  std::vector<PrimePower> factors;
  factors.reserve(acc.size());
  for (auto& [p, e] : acc) factors.push_back(PrimePower{Natural(p), e});
  return FactorizationBuilder::build(std::move(factors));
}

std::optional<std::vector<Natural>> divisors_capped(const Factorization& f, std::uint64_t cap) {
  if (f.divisor_count() > cap) return std::nullopt;
  std::vector<Natural> out{Natural(1)};
  out.reserve(f.divisor_count());
  for (const auto& [p, k] : f.factors()) {
    const std::size_t existing = out.size();
    Natural power(1);
    for (std::uint32_t e = 1; e <= k; ++e) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Natural> divisors(const Factorization& f) {
  return *divisors_capped(f, std::numeric_limits<std::uint64_t>::max());
}

namespace {

template <typename Pick>
std::vector<PrimePower> merge_exponents(const Factorization& a, const Factorization& b, Pick pick) {
  std::vector<PrimePower> out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto fa = a.factors();
  const auto fb = b.factors();
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      if (const auto e = pick(fa[i].exponent, 0u); e > 0) out.push_back({fa[i].prime, e});
      ++i;
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      if (const auto e = pick(0u, fb[j].exponent); e > 0) out.push_back({fb[j].prime, e});
      ++j;
    } else {
      if (const auto e = pick(fa[i].exponent, fb[j].exponent); e > 0) out.push_back({fa[i].prime, e});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Factorization gcd_fact(const Factorization& a, const Factorization& b) {
  return Factorization(merge_exponents(a, b, [](std::uint32_t x, std::uint32_t y) { return std::min(x, y); }));
}

Factorization lcm_fact(const Factorization& a, const Factorization& b) {
  return Factorization(merge_exponents(a, b, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); }));
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  return Factorization(merge_exponents(a, b, [](std::uint32_t x, std::uint32_t y) { return x + y; }));
}

Factorization quotient(const Factorization& a, const Factorization& b) {
  for (const auto& f : b.factors()) {
    if (a.exponent_of(f.prime) < f.exponent) {
      throw std::domain_error("quotient: " + b.to_string() + " does not divide " + a.to_string());
    }
  }
  std::vector<PrimePower> out;
  for (const auto& f : a.factors()) {
    const std::uint32_t e = f.exponent - b.exponent_of(f.prime);
    if (e > 0) out.push_back({f.prime, e});
  }
  return Factorization(std::move(out));
}

std::optional<std::vector<Factorization>> divisor_factorizations(const Factorization& f, std::uint64_t cap) {
  if (f.divisor_count() > cap) return std::nullopt;
  std::vector<std::pair<Natural, std::vector<PrimePower>>> all{{Natural(1), {}}};
  all.reserve(f.divisor_count());
  for (const auto& [p, k] : f.factors()) {
    const std::size_t existing = all.size();
    Natural power(1);
    for (std::uint32_t e = 1; e <= k; ++e) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) {
        auto factors = all[i].second;
        factors.push_back({p, e});
        all.emplace_back(all[i].first * power, std::move(factors));
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Factorization> out;
  out.reserve(all.size());
  for (auto& entry : all) out.push_back(FactorizationBuilder::build(std::move(entry.second)));
  return out;
}

std::pair<Factorization, Factorization> xth_power_split(const Factorization& den, std::uint32_t x) {
  if (x == 0) throw std::domain_error("xth_power_split: exponent must be positive");
  std::vector<PrimePower> c;
  std::vector<PrimePower> b;
  for (const auto& [p, e] : den.factors()) {
    if (e % x != 0) c.push_back({p, e % x});
    if (e / x != 0) b.push_back({p, e / x});
  }
  return {FactorizationBuilder::build(std::move(c)), FactorizationBuilder::build(std::move(b))};
}

PowerSplit xth_power_split(const Natural& den, std::uint32_t x) {
  if (den.is_zero()) throw std::domain_error("xth_power_split: denominator must be positive");
  const auto [c, b] = xth_power_split(factorize(den), x);
  return PowerSplit{c.value(), b.value(), x};
}

Factorization xth_root_ceiling(const Factorization& den, std::uint32_t x) {
  if (x == 0) throw std::domain_error("xth_root_ceiling: exponent must be positive");
  std::vector<PrimePower> out;
  for (const auto& [p, e] : den.factors()) out.push_back({p, (e + x - 1) / x});
  return FactorizationBuilder::build(std::move(out));
}

}  // namespace abundancy
