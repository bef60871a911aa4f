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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "abundancy/classifier.hpp"
#include "abundancy/oracle.hpp"
#include "reference.hpp"

namespace abundancy::oracle {
namespace {

PositiveRational Q(const char* s) { return PositiveRational::parse(s); }

TEST(SieveTest, FactorsMatchTrialDivision) {
  const SmallestFactorSieve sieve(50'000);
  EXPECT_EQ(sieve.limit(), 50'000u);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t n = 1; n <= 50'000; ++n) {
    sieve.factor(n, out);
    const auto ref = reference::factor(n);
    ASSERT_EQ(out.size(), ref.size()) << n;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ASSERT_EQ(out[i].first, ref[i].first);
      ASSERT_EQ(out[i].second, ref[i].second);
    }
  }
}

TEST(SigmaByDivisorsTest, MatchesReference) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    for (unsigned x = 1; x <= 4; ++x) {
      ASSERT_EQ(sigma_by_divisors(factorize(Natural(n)), x).mpz(), reference::sigma(n, x));
    }
  }
}

TEST(MandatoryDivisorTest, Values) {
  EXPECT_EQ(mandatory_divisor(Q("8/3"), 1), Natural(3));
  EXPECT_EQ(mandatory_divisor(Q("9/8"), 2), Natural(4));
  EXPECT_EQ(mandatory_divisor(Q("37/36"), 2), Natural(6));
  EXPECT_EQ(mandatory_divisor(Q("29/12"), 2), Natural(6));
  EXPECT_EQ(mandatory_divisor(Q("2"), 3), Natural(1));
}

TEST(SearchTest, KnownValues) {
  const auto a = search_witness(Q("2"), 1, 10'000);
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(*a.witness, Natural(6));

  const auto c = search_witness(Q("25/18"), 2, 100);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, Natural(6));
}

TEST(SearchTest, EightThirdsIsAttainedAt84) {
  // sigma(84) = 7 * 4 * 8 = 224 = (8/3) * 84, so 8/3 is in the image even
  // though it is also the limit of I(1, 6 * 2^k).
  EXPECT_EQ(reference::index(84, 1), mpq_class(8, 3));
  for (std::uint64_t n = 1; n < 84; ++n) ASSERT_NE(reference::index(n, 1), mpq_class(8, 3)) << n;

  const auto r = search_witness(Q("8/3"), 1, 1'000'000);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, Natural(84));
  EXPECT_EQ(r.step, Natural(3));
}

TEST(SearchTest, PrunedStrideAndErrors) {
  const auto r = search_witness(Q("37/36"), 2, 100'000);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.step, Natural(6));
  EXPECT_LE(r.scanned, 100'000u / 6 + 1);
  EXPECT_THROW(search_witness(Q("1"), 1, 10), std::domain_error);
  EXPECT_THROW(search_witness(Q("3/2"), 1, kMaxScanBound + 1), std::domain_error);
}

TEST(SearchTest, LargeExponentUsesExactArithmetic) {
  // At x = 20 the values outgrow 128 bits; the result must still be exact.
  for (std::uint64_t n : {2u, 6u, 30u, 210u, 997u}) {
    const mpq_class q = reference::index(n, 20);
    const PositiveRational target(Natural(mpz_class(q.get_num())), Natural(mpz_class(q.get_den())));
    const auto r = search_witness(target, 20, 1000, {.pruned = false, .threads = 2});
    ASSERT_TRUE(r.witness) << n;
    EXPECT_EQ(*r.witness, Natural(n));
  }
}

TEST(SearchTest, PrunedAgreesWithUnprunedOnImage) {
  const auto image = image_enumerate(1, 2000, 1);
  for (const auto& [q, w] : image.entries) {
    if (!q.greater_than_one()) continue;
    const auto pruned = search_witness(q, 1, 2000, {.pruned = true, .threads = 1});
    const auto full = search_witness(q, 1, 2000, {.pruned = false, .threads = 1});
    ASSERT_EQ(pruned.witness, full.witness) << q.to_string();
    ASSERT_EQ(pruned.witness, w) << q.to_string();
  }
}

TEST(SearchTest, ThreadCountDoesNotChangeTheAnswer) {
  for (const char* q : {"2", "3", "4/3", "13/6", "7/2"}) {
    const auto one = search_witness(Q(q), 1, 200'000, {.pruned = false, .threads = 1});
    const auto four = search_witness(Q(q), 1, 200'000, {.pruned = false, .threads = 4});
    EXPECT_EQ(one.witness, four.witness) << q;
  }
}

TEST(ImageTest, KnownValues) {
  const auto a = image_enumerate(1, 6);
  const std::map<PositiveRational, Natural> expect{{Q("1"), Natural(1)},   {Q("3/2"), Natural(2)},
                                                   {Q("4/3"), Natural(3)}, {Q("7/4"), Natural(4)},
                                                   {Q("6/5"), Natural(5)}, {Q("2"), Natural(6)}};
  EXPECT_EQ(a.entries, expect);

  const auto b = image_enumerate(2, 2);
  EXPECT_EQ(b.entries, (std::map<PositiveRational, Natural>{{Q("1"), Natural(1)}, {Q("5/4"), Natural(2)}}));

  const auto c = image_enumerate(3, 1);
  EXPECT_EQ(c.entries, (std::map<PositiveRational, Natural>{{Q("1"), Natural(1)}}));
}

TEST(ImageTest, MatchesReferenceAndOneIsUnique) {
  for (unsigned x = 1; x <= 3; ++x) {
    const auto image = image_enumerate(x, 3000, 3);
    std::map<std::string, std::uint64_t> ref;
    for (std::uint64_t n = 1; n <= 3000; ++n) ref.emplace(reference::str(reference::index(n, x)), n);
    ASSERT_EQ(image.entries.size(), ref.size());
    for (const auto& [q, w] : image.entries) {
      ASSERT_EQ(ref.at(reference::str(reference::to_mpq(q))), w.to_u64());
      if (q.is_one()) {
        EXPECT_EQ(w, Natural(1));
      } else {
        EXPECT_TRUE(q.greater_than_one());
      }
    }
    EXPECT_EQ(image.witness_of(Q("1")), Natural(1));
  }
}

TEST(ImageTest, ExtendContinuesAnEnumeration) {
  const auto low = image_enumerate(1, 4000, 2);
  const auto full = image_enumerate(1, 9000, 2);
  auto merged = low;
  for (const auto& [q, w] : image_extend(1, 4001, 9000, low, 2)) {
    ASSERT_FALSE(low.entries.contains(q)) << q.to_string();
    ASSERT_GT(w, Natural(4000));
    merged.entries.emplace(q, w);
  }
  EXPECT_EQ(merged.entries, full.entries);
}

TEST(FindInImageTest, ReportsSmallestWitness) {
  const auto found = find_in_image(1, 10'000, {Q("2"), Q("5/4"), Q("3"), Q("4/3")}, 2);
  ASSERT_EQ(found.size(), 4u);
  EXPECT_EQ(found[0], Natural(6));
  EXPECT_FALSE(found[1]);
  EXPECT_EQ(found[2], Natural(120));
  EXPECT_EQ(found[3], Natural(3));
}

TEST(AuditTest, KnownValues) {
  EffortBudget e;
  e.witness_bound = 100'000;
  EXPECT_TRUE(consistency_audit(1, 100'000, {classify(Q("5/4"), 1, e)}).empty());

  Classification six;
  six.q = Q("2");
  six.verdict = IndexVerdict{Natural(6)};
  EXPECT_TRUE(consistency_audit(1, 100'000, {six}).empty());

  Classification forged;
  forged.q = Q("4/3");
  forged.verdict = OutlawVerdict{T1Certificate{Natural(3)}};
  const auto v = consistency_audit(1, 100'000, {forged});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::kOutlawHasWitness);
  EXPECT_EQ(v[0].witness, Natural(3));
}

TEST(AuditTest, BadWitnessAndExponentMismatch) {
  Classification wrong;
  wrong.q = Q("2");
  wrong.verdict = IndexVerdict{Natural(28 * 2)};
  Classification other;
  other.q = Q("5/4");
  other.x = 2;
  other.verdict = IndexVerdict{Natural(2)};
  const auto v = consistency_audit(1, 1000, {wrong, other});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, Violation::Kind::kBadWitness);
  EXPECT_EQ(v[1].kind, Violation::Kind::kExponentMismatch);
  EXPECT_TRUE(consistency_audit_all(1000, {other}).empty());
  EXPECT_FALSE(to_string(v[0]).empty());
}

TEST(MonotonicityFuzzTest, KnownValues) {
  const auto r = monotonicity_fuzz(10'000, 3, 42);
  EXPECT_EQ(r.samples, 10'000u);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_THROW(monotonicity_fuzz(1, 0, 1), std::domain_error);
}

}  // namespace
}  // namespace abundancy::oracle
