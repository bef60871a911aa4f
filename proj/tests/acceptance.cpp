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

// Acceptance run: one PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abundancy/classifier.hpp"
#include "abundancy/divisor_core.hpp"
#include "abundancy/limits.hpp"
#include "abundancy/oracle.hpp"
#include "abundancy/selfcheck.hpp"
#include "reference.hpp"

#ifndef ABUNDANCY_CLI_PATH
#error "ABUNDANCY_CLI_PATH must name the built command-line tool"
#endif

namespace abundancy {
namespace {
using Clock = std::chrono::steady_clock;

PositiveRational Q(const char* s) { return PositiveRational::parse(s); }

struct Result {
  bool pass = false;
  std::string detail;
};

// detail is built up as the check runs; the first failure ends it.
class Check {
 public:
  bool expect(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
    return ok;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Result done() const { return {pass_, pass_ ? notes_ : "failed: " + first_failure_ + (notes_.empty() ? "" : " | " + notes_)}; }

 private:
  bool pass_ = true;
  std::string first_failure_;
  std::string notes_;
};

double seconds(Clock::duration d) { return std::chrono::duration<double>(d).count(); }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

EffortBudget effort_with(std::uint64_t bound) {
  EffortBudget e;
  e.witness_bound = bound;
  return e;
}

Result perfect_numbers() {
  Check c;
  const auto start = Clock::now();
  const auto r = classify(Q("2"), 1, effort_with(10'000));
  const double elapsed = seconds(Clock::now() - start);
  c.expect(r.is_index() && std::get<IndexVerdict>(r.verdict).witness == Natural(6), "classify(2, 1) is not Index{6}");
  for (std::uint64_t n : {6u, 28u, 496u, 8128u}) {
    c.expect(abundancy(1, Natural(n)) == Q("2"), "I(1, " + std::to_string(n) + ") != 2");
    c.expect(reference::index(n, 1) == 2, "divisor sum of " + std::to_string(n) + " is not 2n");
  }
  c.expect(elapsed < 1.0, "classify took " + fmt(elapsed) + " s");
  c.note("witness 6; 6, 28, 496, 8128 verified; classify " + fmt(elapsed) + " s");
  return c.done();
}

Result sigma_vs_enumeration() {
  Check c;
  const auto start = Clock::now();
  std::uint64_t checks = 0;
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto f = factorize(Natural(n));
    for (unsigned x = 1; x <= 3; ++x, ++checks) {
      if (!c.expect(sigma_x(f, x).mpz() == reference::sigma(n, x), "n=" + std::to_string(n) + " x=" + std::to_string(x))) {
        return c.done();
      }
    }
  }
  const double elapsed = seconds(Clock::now() - start);
  c.expect(elapsed < 30.0, "took " + fmt(elapsed) + " s");
  c.note(std::to_string(checks) + " exact equalities in " + fmt(elapsed) + " s");
  return c.done();
}

Result gcd_lcm_identity() {
  Check c;
  std::uint64_t checks = 0, failures = 0;
  for (std::uint32_t x = 1; x <= 3; ++x) {
    std::vector<PositiveRational> index(500 * 500 + 1);
    for (std::uint64_t n = 1; n < index.size(); ++n) index[n] = abundancy(x, Natural(n));
    for (std::uint64_t a = 1; a <= 500; ++a) {
      for (std::uint64_t b = 1; b <= 500; ++b, ++checks) {
        const std::uint64_t g = std::gcd(a, b);
        if (index[a] * index[b] != index[g] * index[a / g * b]) ++failures;
      }
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " failures");
  c.note(std::to_string(checks) + " pairs, " + std::to_string(failures) + " failures");
  return c.done();
}

Result monotonicity() {
  Check c;
  const auto r = oracle::monotonicity_fuzz(10'000, 3, 42);
  c.expect(r.samples == 10'000 && r.counterexamples.empty(),
           std::to_string(r.counterexamples.size()) + " counterexamples");
  c.note("10000 triples (seed 42), " + std::to_string(r.counterexamples.size()) + " counterexamples");
  return c.done();
}

Result limits() {
  Check c;
  const auto lim = limit_general({Natural(6), Natural(2), 1}).value;
  c.expect(lim == Q("8/3"), "limit_general(6, 2, 1) = " + lim.to_string());

  PositiveRational prev = abundancy(1, Natural(6));
  Natural n(6);
  for (int k = 1; k <= 20; ++k) {
    n = n * Natural(2);
    const auto cur = abundancy(1, n);
    c.expect(prev < cur, "I(1, 6*2^k) not increasing at k=" + std::to_string(k));
    prev = cur;
  }
  const std::string gap = abs_difference_decimal(prev, Q("8/3"), 30);
  c.expect(parse_decimal(gap) < Q("1/100000"), "|I(1, 6*2^20) - 8/3| = " + gap);
  c.note("8/3 exact; |I(1,6*2^20) - 8/3| = " + gap);

  const auto seq = even_perfect_sequence(8, 2, {.mersenne_only = true});
  const std::uint64_t ps[] = {2, 3, 5, 7, 13, 17, 19, 31};
  const auto target = even_perfect_limit(2);
  c.expect(target == Q("4/3"), "limit at x=2 is " + target.to_string());
  c.expect(seq.size() == 8, "sequence length " + std::to_string(seq.size()));
  mpq_class last_gap = 1000;
  std::string final_gap;
  for (std::size_t i = 0; i < seq.size() && i < 8; ++i) {
    c.expect(seq[i].p == Natural(ps[i]), "unexpected Mersenne exponent " + seq[i].p.to_string());
    c.expect(target < seq[i].index, "I(2, N) not above 4/3 at p=" + seq[i].p.to_string());
    const mpq_class g = reference::to_mpq(seq[i].index) - reference::to_mpq(target);
    c.expect(g < last_gap, "distance not decreasing at p=" + seq[i].p.to_string());
    last_gap = g;
    final_gap = abs_difference_decimal(seq[i].index, target, 40);
  }
  c.expect(last_gap < mpq_class(1, 1'000'000'000), "final distance " + final_gap);
  c.note("I(2, N_p) -> 4/3 monotonically, final distance " + final_gap.substr(0, 36));
  return c.done();
}

Result lemmas() {
  Check c;
  const auto start = Clock::now();
  std::uint64_t bicond = 0, ratio = 0;
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const auto ref = reference::factor(n);
    const auto f = factorize(Natural(n));
    for (std::size_t j = 0; j < ref.size(); ++j) {
      for (unsigned x = 1; x <= 3; ++x) {
        const mpq_class up = reference::index(n * ref[j].first, x);
        ++ratio;
        if (!c.expect(reference::to_mpq(lemma1_ratio(f, j, x)) * reference::index(n, x) == up,
                      "ratio identity n=" + std::to_string(n))) {
          return c.done();
        }
        if (ref.size() < 2) continue;
        for (std::uint64_t t = 1; t <= 5; ++t, ++bicond) {
          mpq_class lhs(reference::sigma(n, x) + t, reference::power(n, x));
          lhs.canonicalize();
          if (!c.expect(lemma2_bound(f, j, Natural(t), x) == (lhs < up),
                        "biconditional n=" + std::to_string(n) + " j=" + std::to_string(j) + " t=" + std::to_string(t))) {
            return c.done();
          }
        }
      }
    }
  }
  const double elapsed = seconds(Clock::now() - start);
  c.expect(elapsed < 120.0, "took " + fmt(elapsed) + " s");
  c.note(std::to_string(bicond) + " biconditional and " + std::to_string(ratio) + " ratio checks in " + fmt(elapsed) +
         " s");
  return c.done();
}

Result outlaw_soundness() {
  Check c;
  std::vector<Classification> corpus;
  const auto e = effort_with(1'000'000);
  struct Case {
    const char* q;
    std::uint32_t x;
  };
  std::string theorems;
  for (const Case k : {Case{"5/4", 1}, {"7/6", 1}, {"11/6", 1}, {"29/12", 1}, {"37/36", 2}}) {
    auto r = classify(Q(k.q), k.x, e);
    if (c.expect(r.is_outlaw(), std::string(k.q) + " is not Outlaw")) {
      theorems += std::string(theorems.empty() ? "" : ", ") + k.q + " " +
                  std::string(theorem_name(std::get<OutlawVerdict>(r.verdict).certificate));
    }
    corpus.push_back(std::move(r));
  }
  const auto v = oracle::consistency_audit_all(1'000'000, corpus);
  c.expect(v.empty(), v.empty() ? "" : oracle::to_string(v.front()));
  const auto boundary = classify(Q("4/3"), 1, e);
  c.expect(boundary.is_index() && std::get<IndexVerdict>(boundary.verdict).witness == Natural(3),
           "4/3 is not Index{3}");
  c.note(theorems + "; audit to 10^6 clean; 4/3 Index{3}");
  return c.done();
}

Result cross_classification() {
  Check c;
  const auto primes = reference::primes_up_to(97);
  std::vector<Classification> at_one;
  int count = 0;
  for (std::size_t i = 0; i < 25; ++i) {
    const Natural p(primes[i]);
    for (std::uint32_t x = 2; x <= 3; ++x, ++count) {
      const auto cross = prime_power_cross(p, x);
      const std::string tag = "p=" + p.to_string() + " x=" + std::to_string(x);
      c.expect(cross.value == PositiveRational(pow(p, x) + Natural(1), pow(p, x)), tag + " value");
      auto one = classify(cross.value, 1, effort_with(100'000));
      c.expect(one.is_outlaw(), tag + " not Outlaw at exponent 1");
      at_one.push_back(std::move(one));
      const auto atx = classify(cross.value, x, effort_with(100'000));
      c.expect(atx.is_index() && std::get<IndexVerdict>(atx.verdict).witness == p, tag + " not Index{p} at x");
      c.expect(reference::index(primes[i], x) == reference::to_mpq(cross.value), tag + " I(x, p) differs");
    }
  }
  const auto v = oracle::consistency_audit(1, 100'000, at_one);
  c.expect(v.empty(), v.empty() ? "" : oracle::to_string(v.front()));
  c.note(std::to_string(count) + " (p, x) pairs: Outlaw at 1 (audited to 10^5), Index{p} at x");
  return c.done();
}

Result theorem10_round_trip() {
  Check c;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::uint64_t> pick(2, 10'000);
  std::uint64_t derived = 0, eligible = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t n = pick(rng);
    for (std::uint32_t x = 1; x <= 3; ++x) {
      const auto q = abundancy(x, Natural(n));
      const auto [cf, bf] = xth_power_split(factorize(q.den()), x);
      for (const auto& d : divisors(bf)) {
        ++eligible;
        const auto r = derive_index_theoremC(q, x, Natural(n), factorize(d));
        if (!r) continue;
        ++derived;
        const std::uint64_t rest = n / d.to_u64();
        c.expect(n % d.to_u64() == 0 && reference::to_mpq(r->value) == reference::index(rest, x),
                 "n=" + std::to_string(n) + " d=" + d.to_string() + " x=" + std::to_string(x));
      }
    }
  }
  c.expect(derived > 0, "no divisor met the hypotheses");
  c.note(std::to_string(derived) + " of " + std::to_string(eligible) + " candidate divisors derived, all exact");
  return c.done();
}

Result negative_control() {
  Check c;
  Classification forged;
  forged.q = Q("4/3");
  forged.x = 1;
  forged.verdict = OutlawVerdict{T1Certificate{Natural(3)}};
  const auto v = oracle::consistency_audit(1, 100'000, {forged});
  c.expect(v.size() == 1 && v[0].witness == Natural(3), "audit did not report exactly witness 3");

  SelfcheckOptions o;
  o.bound = 2000;
  o.inject_forged = true;
  c.expect(!run_selfcheck(o).ok(), "library selfcheck passed with a forged certificate");

  const auto cache = std::filesystem::temp_directory_path() / "abundancy-acceptance-cache";
  const std::string cmd = "ABUNDANCY_CACHE_DIR=" + cache.string() + " " + ABUNDANCY_CLI_PATH +
                          " selfcheck --bound 2000 --inject-forged > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  c.expect(code != 0, "CLI selfcheck exited 0");
  c.note("forged T1{3} on 4/3 rejected with witness 3; selfcheck exit " + std::to_string(code));
  return c.done();
}

}  // namespace
}  // namespace abundancy

int main() {
  using namespace abundancy;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"perfect numbers", perfect_numbers},
      {"sigma closed form vs enumeration", sigma_vs_enumeration},
      {"gcd-lcm identity", gcd_lcm_identity},
      {"monotonicity", monotonicity},
      {"limits", limits},
      {"lemma biconditional and ratio identity", lemmas},
      {"outlaw certificates are sound", outlaw_soundness},
      {"cross-classification", cross_classification},
      {"index propagation round trip", theorem10_round_trip},
      {"negative control", negative_control},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds(Clock::now() - start);
    if (!o.pass) ++failures;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << o.detail << "; " << fmt(elapsed) << " s)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
