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

#include "abundancy/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "abundancy/classifier.hpp"
#include "abundancy/divisor_core.hpp"
#include "abundancy/image_cache.hpp"
#include "abundancy/limits.hpp"

namespace abundancy {
namespace {

using Clock = std::chrono::steady_clock;

// Body returns the first counterexample, or an empty string.
PropertyResult run_property(std::string name, std::uint64_t samples, const std::function<std::string()>& body) {
  PropertyResult r;
  r.name = std::move(name);
  r.samples = samples;
  const auto start = Clock::now();
  r.counterexample = body();
  r.passed = r.counterexample.empty();
  r.elapsed = Clock::now() - start;
  return r;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

oracle::ImageTable image_for(const SelfcheckOptions& o, std::uint32_t x, std::uint64_t bound) {
  if (o.cache_dir) return ImageCache(*o.cache_dir).load_or_build(x, bound, o.threads);
  return oracle::image_enumerate(x, bound, o.threads);
}

}  // namespace

bool SelfcheckReport::ok() const {
  return violations.empty() &&
         std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

SelfcheckReport run_selfcheck(const SelfcheckOptions& o) {
  if (o.x_max == 0) throw std::domain_error("x_max must be at least 1");
  SelfcheckReport report;
  auto& props = report.properties;
  const std::uint64_t b = std::max<std::uint64_t>(o.bound, 1);
  std::mt19937_64 rng(o.seed);

  const std::uint64_t round_trip_n = std::min<std::uint64_t>(b, 1'000'000);
  props.push_back(run_property("factorize round trip", round_trip_n, [&] {
    for (std::uint64_t n = 1; n <= round_trip_n; ++n) {
      if (factorize(Natural(n)).value() != Natural(n)) return "n = " + str(n);
    }
    return std::string();
  }));

  const std::uint64_t sigma_n = std::min<std::uint64_t>(b, 10'000);
  props.push_back(run_property("sigma closed form = divisor sum", sigma_n * o.x_max, [&] {
    for (std::uint64_t n = 1; n <= sigma_n; ++n) {
      const auto f = factorize(Natural(n));
      for (std::uint32_t x = 1; x <= o.x_max; ++x) {
        if (sigma_x(f, x) != oracle::sigma_by_divisors(f, x)) return "n = " + str(n) + ", x = " + str(x);
      }
    }
    return std::string();
  }));

  const std::uint64_t pair_n = std::min<std::uint64_t>(b, 10'000);
  const std::uint64_t mult_samples = std::min<std::uint64_t>(b, 2'000);
  props.push_back(run_property("multiplicativity on coprime pairs", mult_samples, [&] {
    std::uniform_int_distribution<std::uint64_t> pick(1, pair_n);
    std::uniform_int_distribution<std::uint32_t> pick_x(1, o.x_max);
    for (std::uint64_t i = 0; i < mult_samples; ++i) {
      const std::uint64_t a = pick(rng), c = pick(rng);
      if (std::gcd(a, c) != 1) continue;
      const std::uint32_t x = pick_x(rng);
      if (abundancy(x, Natural(a * c)) != abundancy(x, Natural(a)) * abundancy(x, Natural(c))) {
        return "a = " + str(a) + ", b = " + str(c) + ", x = " + str(x);
      }
    }
    return std::string();
  }));

  const std::uint64_t lcm_n = std::min<std::uint64_t>(b, 150);
  props.push_back(run_property("gcd-lcm identity", lcm_n * lcm_n * o.x_max, [&] {
    for (std::uint32_t x = 1; x <= o.x_max; ++x) {
      std::vector<PositiveRational> index(lcm_n * lcm_n + 1);
      for (std::uint64_t n = 1; n < index.size(); ++n) index[n] = abundancy(x, Natural(n));
      for (std::uint64_t a = 1; a <= lcm_n; ++a) {
        for (std::uint64_t c = a; c <= lcm_n; ++c) {
          const std::uint64_t g = std::gcd(a, c);
          if (index[a] * index[c] != index[g] * index[a / g * c]) {
            return "a = " + str(a) + ", b = " + str(c) + ", x = " + str(x);
          }
        }
      }
    }
    return std::string();
  }));

  const std::uint64_t mono_samples = std::min<std::uint64_t>(b, 10'000);
  props.push_back(run_property("monotonicity I(x, kn) > I(x, n)", mono_samples, [&] {
    const auto r = oracle::monotonicity_fuzz(mono_samples, o.x_max, o.seed);
    if (r.counterexamples.empty()) return std::string();
    const auto& c = r.counterexamples.front();
    return "n = " + c.n.to_string() + ", k = " + c.k.to_string() + ", x = " + str(c.x);
  }));

  const std::uint64_t lemma_n = std::min<std::uint64_t>(b, 1'000);
  props.push_back(run_property("lemma2 bound biconditional", lemma_n, [&] {
    for (std::uint64_t n = 6; n <= lemma_n; ++n) {
      const auto f = factorize(Natural(n));
      if (f.size() < 2) continue;
      for (std::uint32_t x = 1; x <= o.x_max; ++x) {
        for (std::size_t j = 0; j < f.size(); ++j) {
          for (std::uint64_t t = 1; t <= 5; ++t) {
            const PositiveRational lhs(oracle::sigma_by_divisors(f, x) + Natural(t), pow(Natural(n), x));
            const bool direct = lhs < abundancy(x, f.times_prime(f[j].prime));
            if (lemma2_bound(f, j, Natural(t), x) != direct) {
              return "n = " + str(n) + ", j = " + str(j) + ", t = " + str(t) + ", x = " + str(x);
            }
          }
        }
      }
    }
    return std::string();
  }));

  props.push_back(run_property("lemma1 ratio identity", lemma_n, [&] {
    for (std::uint64_t n = 2; n <= lemma_n; ++n) {
      const auto f = factorize(Natural(n));
      for (std::uint32_t x = 1; x <= o.x_max; ++x) {
        for (std::size_t j = 0; j < f.size(); ++j) {
          if (lemma1_ratio(f, j, x) * abundancy(x, f) != abundancy(x, f.times_prime(f[j].prime))) {
            return "n = " + str(n) + ", j = " + str(j) + ", x = " + str(x);
          }
        }
      }
    }
    return std::string();
  }));

  const std::uint64_t prop_n = std::min<std::uint64_t>(b, 2'000);
  props.push_back(run_property("divisor propagation round trip", prop_n, [&] {
    for (std::uint64_t n = 1; n <= prop_n; ++n) {
      const Natural nv(n);
      const auto f = factorize(nv);
      for (std::uint32_t x = 1; x <= o.x_max; ++x) {
        const PositiveRational q = abundancy(x, f);
        if (!q.greater_than_one()) continue;
        const auto [c, root] = xth_power_split(factorize(q.den()), x);
        for (const auto& d : divisors(root)) {
          const auto r = derive_index_theoremC(q, x, nv, factorize(d));
          if (!r) continue;
          const Natural rest = exact_div(nv, d);
          if (r->value != abundancy(x, rest) || r->witness != rest || !gcd(rest, d).is_one()) {
            return "n = " + str(n) + ", d = " + d.to_string() + ", x = " + str(x);
          }
        }
      }
    }
    return std::string();
  }));

  const std::uint64_t image_n = std::min<std::uint64_t>(b, 20'000);
  std::uint64_t image_values = 0;
  std::vector<oracle::ImageTable> images;
  for (std::uint32_t x = 1; x <= o.x_max; ++x) {
    images.push_back(image_for(o, x, image_n));
    image_values += images.back().entries.size();
  }
  props.push_back(run_property("no certificate for an attained value", image_values, [&] {
    for (const auto& table : images) {
      for (const auto& [q, w] : table.entries) {
        if (!q.greater_than_one()) continue;
        if (const auto cert = certify_outlaw(q, table.x)) {
          return q.to_string() + " at x = " + str(table.x) + " (witness " + w.to_string() + ") got " +
                 std::string(theorem_name(*cert));
        }
      }
    }
    return std::string();
  }));

  const std::uint64_t prune_n = std::min<std::uint64_t>(b, 300);
  const std::uint64_t prune_bound = std::min<std::uint64_t>(b, 2'000);
  props.push_back(run_property("pruned search = unpruned search", images.front().entries.size(), [&] {
    for (const auto& [q, w] : images.front().entries) {
      if (!q.greater_than_one() || w > Natural(prune_n)) continue;
      const auto pruned = oracle::search_witness(q, 1, prune_bound, {.pruned = true, .threads = o.threads});
      const auto full = oracle::search_witness(q, 1, prune_bound, {.pruned = false, .threads = o.threads});
      if (pruned.witness != full.witness || pruned.witness != w) return q.to_string();
    }
    return std::string();
  }));

  props.push_back(run_property("limit identities", o.x_max * 3, [&] {
    for (std::uint32_t x = 1; x <= o.x_max; ++x) {
      if (limit_general({Natural(12), Natural(6), x}).value != limit_prime_product(factorize(Natural(6)), x)) {
        return "a = 1 case at x = " + str(x);
      }
      if (limit_general({Natural(35), Natural(6), x}).value !=
          abundancy(x, Natural(35)) * limit_prime_product(factorize(Natural(6)), x)) {
        return "coprime case at x = " + str(x);
      }
      PositiveRational prev = abundancy(x, Natural(6));
      const PositiveRational lim = limit_general({Natural(6), Natural(2), x}).value;
      Natural n(6);
      for (int k = 1; k <= 20; ++k) {
        n = n * Natural(2);
        const PositiveRational cur = abundancy(x, n);
        if (!(prev < cur) || !(cur < lim)) return "I(x, 6 2^k) not increasing below its limit at k = " + str(k);
        prev = cur;
      }
    }
    return std::string();
  }));

  // Corpus audit: every verdict classify gives on the headline values.
  std::vector<Classification> corpus;
  EffortBudget effort;
  effort.witness_bound = b;
  effort.threads = o.threads;
  for (const char* q : {"2", "4/3", "5/4", "7/6", "11/6", "29/12"}) {
    corpus.push_back(classify(PositiveRational::parse(q), 1, effort));
  }
  if (o.x_max >= 2) {
    corpus.push_back(classify(PositiveRational::parse("37/36"), 2, effort));
    corpus.push_back(classify(PositiveRational::parse("5/4"), 2, effort));
  }
  if (o.inject_forged) {
    Classification forged;
    forged.q = PositiveRational::parse("4/3");
    forged.x = 1;
    forged.verdict = OutlawVerdict{T1Certificate{Natural(3)}};
    corpus.push_back(forged);
  }
  const auto audit_start = Clock::now();
  report.violations = oracle::consistency_audit_all(b, corpus, o.threads);
  PropertyResult audit;
  audit.name = "consistency audit";
  audit.passed = report.violations.empty();
  audit.samples = corpus.size();
  if (!audit.passed) audit.counterexample = oracle::to_string(report.violations.front());
  audit.elapsed = Clock::now() - audit_start;
  props.push_back(std::move(audit));
  return report;
}

}  // namespace abundancy
