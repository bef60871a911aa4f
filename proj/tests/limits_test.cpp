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

#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "abundancy/divisor_core.hpp"
#include "abundancy/limits.hpp"
#include "reference.hpp"

namespace abundancy {
namespace {

PositiveRational Q(const char* s) { return PositiveRational::parse(s); }
Factorization F(std::uint64_t n) { return factorize(Natural(n)); }

// Π p^x/(p^x - 1) over the distinct primes of m, from trial division.
mpq_class reference_limit(std::uint64_t m, unsigned x) {
  mpq_class r = 1;
  for (const auto& [p, e] : reference::factor(m)) {
    const mpz_class px = reference::power(p, x);
    r *= mpq_class(px, px - 1);
  }
  r.canonicalize();
  return r;
}

TEST(CoprimeSplitTest, KnownValues) {
  const auto a = coprime_split(Natural(6), Natural(2));
  EXPECT_EQ(a.a, Natural(3));
  EXPECT_EQ(a.b, Natural(2));
  const auto b = coprime_split(Natural(35), Natural(6));
  EXPECT_EQ(b.a, Natural(35));
  EXPECT_EQ(b.b, Natural(1));
  const auto c = coprime_split(Natural(12), Natural(6));
  EXPECT_EQ(c.a, Natural(1));
  EXPECT_EQ(c.b, Natural(12));
}

TEST(CoprimeSplitTest, InvariantsHold) {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    for (std::uint64_t m = 2; m <= 40; ++m) {
      const auto s = coprime_split(Natural(n), Natural(m));
      ASSERT_EQ(s.a * s.b, Natural(n));
      ASSERT_TRUE(gcd(s.a, Natural(m)).is_one());
      for (const auto& [p, e] : reference::factor(s.b.to_u64())) ASSERT_EQ(m % p, 0u) << n << " " << m;
    }
  }
}

TEST(LimitPrimeProductTest, KnownValues) {
  EXPECT_EQ(limit_prime_product(F(2), 1), Q("2"));
  EXPECT_EQ(limit_prime_product(F(6), 1), Q("3"));
  EXPECT_EQ(limit_prime_product(F(4), 2), Q("4/3"));
  EXPECT_EQ(limit_prime_product(F(1), 3), Q("1"));
}

TEST(LimitPrimeProductTest, AgreesWithReference) {
  for (std::uint64_t m = 2; m <= 500; ++m) {
    for (unsigned x = 1; x <= 3; ++x) {
      ASSERT_EQ(reference::to_mpq(limit_prime_product(F(m), x)), reference_limit(m, x)) << m;
    }
  }
}

TEST(LimitGeneralTest, KnownValues) {
  EXPECT_EQ(limit_general({Natural(6), Natural(2), 1}).value, Q("8/3"));
  EXPECT_EQ(limit_general({Natural(1), Natural(30), 2}).value, limit_prime_product(F(30), 2));
  EXPECT_EQ(limit_general({Natural(12), Natural(6), 1}).value, Q("3"));
  EXPECT_EQ(limit_general({Natural(1), Natural(2), 3}).value, Q("8/7"));
}

TEST(LimitGeneralTest, DegenerateM) {
  const auto r = limit_general({Natural(5), Natural(1), 1});
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.value, Q("6/5"));
  EXPECT_FALSE(limit_general({Natural(5), Natural(2), 1}).degenerate);
}

TEST(LimitGeneralTest, ACasesAndCoprimeCases) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint64_t m = 2; m <= 30; ++m) {
      for (unsigned x = 1; x <= 2; ++x) {
        const auto lim = limit_general({Natural(n), Natural(m), x}).value;
        const auto s = coprime_split(Natural(n), Natural(m));
        if (s.a.is_one()) ASSERT_EQ(lim, limit_prime_product(F(m), x));
        if (std::gcd(n, m) == 1) ASSERT_EQ(lim, abundancy(x, Natural(n)) * limit_prime_product(F(m), x));
      }
    }
  }
}

TEST(LimitGeneralTest, SequenceIncreasesAndConverges) {
  for (std::uint64_t n : {1u, 6u, 10u, 45u, 77u}) {
    for (std::uint64_t m : {2u, 3u, 6u, 10u}) {
      for (unsigned x = 1; x <= 3; ++x) {
        const auto lim = limit_general({Natural(n), Natural(m), x}).value;
        const mpq_class lim_q = reference::to_mpq(lim);
        PositiveRational prev = abundancy(x, Natural(n));
        Natural mk(1);
        for (unsigned k = 1;; ++k) {
          mk = mk * Natural(m);
          const Natural term = Natural(n) * mk;
          if (term > Natural(1'000'000'000'000ull)) break;
          const auto cur = abundancy(x, term);
          ASSERT_LT(prev, cur) << n << " " << m << " k=" << k;
          ASSERT_LT(cur, lim) << n << " " << m << " k=" << k;
          // Each prime p of m contributes a factor 1 - p^{-x(v+1)} with
          // v >= k, so the gap is at most lim * Σ p^{-x(k+1)}.
          mpq_class slack = 0;
          for (const auto& [p, e] : reference::factor(m)) slack += mpq_class(1, reference::power(p, x * (k + 1)));
          ASSERT_LE(lim_q - reference::to_mpq(cur), lim_q * slack) << n << " " << m << " k=" << k;
          if (lim_q * slack < mpq_class(1, 1'000'000)) {
            ASSERT_TRUE(within(cur, lim, Q("1/1000000"))) << n << " " << m << " k=" << k;
          }
          prev = cur;
        }
      }
    }
  }
}

TEST(LimitGeneralTest, MPowerAboveAMillionIsNotEnoughForMicroPrecision) {
  // 6^8 > 10^6, yet the factor 2 lags: 3 - I(6^8) is about 3 / 2^9.
  const auto lim = limit_general({Natural(1), Natural(6), 1}).value;
  const auto cur = abundancy(1, pow(Natural(6), 8));
  EXPECT_FALSE(within(cur, lim, Q("1/1000000")));
  EXPECT_TRUE(within(cur, lim, Q("1/100")));
  // Likewise n = 45, m = 2 at k = 20: I(45) / 2^20 > 10^-6.
  EXPECT_FALSE(within(abundancy(1, Natural(45) * pow(Natural(2), 20)),
                      limit_general({Natural(45), Natural(2), 1}).value, Q("1/1000000")));
}

TEST(RatioInvarianceTest, KnownValues) {
  EXPECT_EQ(ratio_invariance_check(Natural(3), Natural(5), Natural(2), 3, 1, 1), RatioInvariance::kHolds);
  EXPECT_EQ(ratio_invariance_check(Natural(9), Natural(9), Natural(6), 4, 2, 2), RatioInvariance::kHolds);
  EXPECT_EQ(ratio_invariance_check(Natural(6), Natural(10), Natural(2), 2, 0, 2), RatioInvariance::kHolds);
  EXPECT_EQ(ratio_invariance_check(Natural(6), Natural(20), Natural(2), 2, 0, 1),
            RatioInvariance::kNotApplicable);
  EXPECT_EQ(to_string(RatioInvariance::kNotApplicable), "not applicable");
}

TEST(RatioInvarianceTest, HoldsWheneverApplicable) {
  int applicable = 0;
  for (std::uint64_t n1 = 1; n1 <= 60; ++n1) {
    for (std::uint64_t n2 = 1; n2 <= 60; ++n2) {
      const auto r = ratio_invariance_check(Natural(n1), Natural(n2), Natural(6), 3, 1, 2);
      ASSERT_NE(r, RatioInvariance::kFails) << n1 << " " << n2;
      if (r == RatioInvariance::kHolds) ++applicable;
    }
  }
  EXPECT_GT(applicable, 60);
}

TEST(EvenPerfectTest, KnownValues) {
  const auto two = even_perfect_sequence(2, 1);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].p, Natural(2));
  EXPECT_EQ(two[0].n, Natural(6));
  EXPECT_EQ(two[0].index, Q("2"));
  EXPECT_EQ(two[1].p, Natural(3));
  EXPECT_EQ(two[1].n, Natural(28));
  EXPECT_EQ(two[1].index, Q("2"));

  const auto one = even_perfect_sequence(1, 2);
  EXPECT_EQ(one[0].index, Q("25/18"));
}

TEST(EvenPerfectTest, CompositeMersenneTermIsExact) {
  const auto seq = even_perfect_sequence(5, 1);
  const auto& t = seq[4];
  EXPECT_EQ(t.p, Natural(11));
  EXPECT_EQ(t.n, Natural(1024 * 2047));
  EXPECT_FALSE(t.mersenne_prime);
  EXPECT_EQ(reference::to_mpq(t.index), reference::index(1024 * 2047, 1));
  EXPECT_NE(t.index, Q("2"));
}

TEST(EvenPerfectTest, MersenneOnlyFilter) {
  const auto seq = even_perfect_sequence(8, 1, {.mersenne_only = true});
  const std::uint64_t expect[] = {2, 3, 5, 7, 13, 17, 19, 31};
  ASSERT_EQ(seq.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(seq[i].p, Natural(expect[i]));
    EXPECT_TRUE(seq[i].mersenne_prime);
    EXPECT_EQ(seq[i].index, Q("2"));
  }
}

TEST(EvenPerfectTest, CountCapped) {
  EXPECT_THROW(even_perfect_sequence(13, 1), std::domain_error);
  EXPECT_NO_THROW(even_perfect_sequence(13, 1, {.max_count = 20}));
}

TEST(EvenPerfectTest, LimitValue) {
  EXPECT_EQ(even_perfect_limit(1), Q("2"));
  EXPECT_EQ(even_perfect_limit(2), Q("4/3"));
  EXPECT_EQ(even_perfect_limit(3), Q("8/7"));
}

}  // namespace
}  // namespace abundancy
