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

// abundancy: command-line front end for the library.
//
// Exit codes: 0 index or success, 3 outlaw, 4 unknown, 2 usage error,
// 1 selfcheck failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "abundancy/classifier.hpp"
#include "abundancy/divisor_core.hpp"
#include "abundancy/image_cache.hpp"
#include "abundancy/json_io.hpp"
#include "abundancy/limits.hpp"
#include "abundancy/oracle.hpp"
#include "abundancy/selfcheck.hpp"

namespace {

using namespace abundancy;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitSelfcheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutlaw = 3;
constexpr int kExitUnknown = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  unsigned threads = 0;
};

Natural parse_natural(const std::string& text, const char* what) {
  try {
    return Natural::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a non-negative decimal integer, got \"" + text + "\"");
  }
}

Natural parse_positive(const std::string& text, const char* what) {
  Natural n = parse_natural(text, what);
  if (n.is_zero()) throw UsageError(std::string(what) + " must be positive");
  return n;
}

PositiveRational parse_fraction(const std::string& text) {
  try {
    return PositiveRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("expected a fraction a/b with a, b > 0, got \"" + text + "\"");
  }
}

std::string with_decimal(const PositiveRational& q, std::optional<std::size_t> digits) {
  if (!digits) return q.to_string();
  return q.to_string() + "  ~ " + q.to_decimal(*digits);
}

void emit(const Globals& g, std::string_view command, Json inputs, Json result, Clock::time_point start,
          const std::string& text) {
  if (g.json) {
    std::cout << output_record(command, std::move(inputs), std::move(result), Clock::now() - start).dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string certificate_text(const Certificate& cert) {
  return std::string(theorem_name(cert)) + " " + certificate_to_json(PositiveRational(), 1, cert)["params"].dump();
}

int verdict_exit_code(const Classification& c) {
  if (c.is_index()) return kExitOk;
  if (c.is_outlaw()) return kExitOutlaw;
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized abundancy index I(x, n) = sigma_x(n)/n^x: exact values, outlaw certificates, audits"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON record (schema v1)");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");

  std::uint32_t x = 1;
  std::optional<std::size_t> decimal;
  auto add_x = [&](CLI::App* cmd) {
    cmd->add_option("--x", x, "Exponent x >= 1")->check(CLI::PositiveNumber);
  };
  auto add_decimal = [&](CLI::App* cmd) {
    cmd->add_option("--decimal", decimal, "Also print a truncated decimal with P digits")->check(CLI::Range(0, 10000));
  };

  std::string n_text, m_text, q_text, p_text, alpha_text;

  auto* sigma = app.add_subcommand("sigma", "sigma_x(n)");
  sigma->add_option("n", n_text)->required();
  add_x(sigma);

  auto* index = app.add_subcommand("index", "I(x, n) as an exact fraction");
  index->add_option("n", n_text)->required();
  add_x(index);
  add_decimal(index);

  EffortBudget effort;
  auto* classify_cmd = app.add_subcommand("classify", "Index with witness, outlaw with certificate, or unknown");
  classify_cmd->add_option("q", q_text, "Fraction a/b > 1")->required();
  add_x(classify_cmd);
  classify_cmd->add_option("--witness-bound", effort.witness_bound, "Largest n tried as a witness")
      ->capture_default_str()
      ->check(CLI::Range(std::uint64_t{1}, oracle::kMaxScanBound));
  classify_cmd->add_option("--divisor-cap", effort.divisor_enum_cap, "Divisor candidates per enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--t-max", effort.t_max, "Largest excess t tried against sigma_x(m)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* limit = app.add_subcommand("limit", "lim_k I(x, n m^k)");
  limit->add_option("n", n_text)->required();
  limit->add_option("m", m_text)->required();
  add_x(limit);
  add_decimal(limit);

  std::uint32_t count = 0;
  bool mersenne_only = false;
  auto* perfect = app.add_subcommand("perfect-seq", "I(x, 2^(p-1)(2^p - 1)) over primes p");
  perfect->add_option("count", count)->required()->check(CLI::Range(1, 64));
  perfect->add_flag("--mersenne-only", mersenne_only, "Keep only p with 2^p - 1 prime");
  add_x(perfect);
  add_decimal(perfect);

  std::uint64_t bound = 1'000'000;
  bool unpruned = false;
  auto* search = app.add_subcommand("search", "Smallest n <= bound with I(x, n) = q");
  search->add_option("q", q_text)->required();
  search->add_option("--bound", bound)->capture_default_str()->check(CLI::Range(std::uint64_t{1}, oracle::kMaxScanBound));
  search->add_flag("--unpruned", unpruned, "Scan every n instead of multiples of the mandatory divisor");
  add_x(search);

  std::uint64_t image_bound = 1'000;
  bool no_cache = false;
  auto* image = app.add_subcommand("image", "Every value I(x, n), n <= bound, with its smallest witness");
  image->add_option("--bound", image_bound)->capture_default_str()->check(CLI::Range(std::uint64_t{1}, oracle::kMaxScanBound));
  image->add_flag("--no-cache", no_cache, "Do not read or write the image cache");
  add_x(image);

  SelfcheckOptions sc;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the property suite and the consistency audit");
  selfcheck->add_option("--bound", sc.bound)->capture_default_str()->check(CLI::Range(std::uint64_t{1}, oracle::kMaxScanBound));
  selfcheck->add_option("--x-max", sc.x_max)->capture_default_str()->check(CLI::Range(1, 8));
  selfcheck->add_option("--seed", sc.seed)->capture_default_str();
  selfcheck->add_flag("--inject-forged", sc.inject_forged, "Add a forged certificate (negative control)");

  auto* odd = app.add_subcommand("odd-perfect-check", "Does I(1, n) = 2p^a(p-1)/(p^(a+1)-1) with p not dividing n?");
  odd->add_option("n", n_text)->required();
  odd->add_option("p", p_text)->required();
  odd->add_option("alpha", alpha_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = Clock::now();
  const Json xj = x;
  try {
    if (*sigma) {
      const Natural n = parse_positive(n_text, "n");
      const Natural s = sigma_x(n, x);
      emit(g, "sigma", {{"n", n.to_string()}, {"x", xj}}, {{"value", s.to_string()}}, start, s.to_string() + "\n");
      return kExitOk;
    }

    if (*index) {
      const Natural n = parse_positive(n_text, "n");
      const PositiveRational q = abundancy::abundancy(x, n);
      Json result{{"value", q.to_string()}};
      if (decimal) result["decimal"] = q.to_decimal(*decimal);
      emit(g, "index", {{"n", n.to_string()}, {"x", xj}}, result, start, with_decimal(q, decimal) + "\n");
      return kExitOk;
    }

    if (*classify_cmd) {
      const PositiveRational q = parse_fraction(q_text);
      if (!q.greater_than_one()) throw UsageError("q = " + q.to_string() + " must exceed 1");
      effort.threads = g.threads;
      const Classification c = classify(q, x, effort);
      std::string text = "q = " + q.to_string() + ", x = " + std::to_string(x) + "\nverdict: " +
                         std::string(verdict_name(c.verdict)) + "\n";
      if (const auto* iv = std::get_if<IndexVerdict>(&c.verdict)) {
        text += "witness: " + iv->witness.to_string() + "\n";
      } else if (const auto* ov = std::get_if<OutlawVerdict>(&c.verdict)) {
        text += "certificate: " + certificate_text(ov->certificate) + "\n";
      }
      for (const auto& note : c.notes) text += "note: " + note + "\n";
      for (const auto& i : c.implied) {
        text += "implied index: " + i.value.to_string() + " (witness " + i.witness.to_string() + ", " + i.rule + ")\n";
      }
      Json inputs{{"q", q.to_string()},
                  {"x", xj},
                  {"witness_bound", effort.witness_bound},
                  {"divisor_cap", effort.divisor_enum_cap},
                  {"t_max", effort.t_max}};
      emit(g, "classify", std::move(inputs), classification_to_json(c), start, text);
      return verdict_exit_code(c);
    }

    if (*limit) {
      const Natural n = parse_positive(n_text, "n");
      const Natural m = parse_positive(m_text, "m");
      const LimitResult r = limit_general({n, m, x});
      std::string text;
      if (r.degenerate) {
        std::cerr << "warning: m < 2, the sequence I(x, n m^k) is constant; printing I(x, n)\n";
      }
      text += with_decimal(r.value, decimal) + "\n";
      Json result{{"value", r.value.to_string()}, {"degenerate", r.degenerate}};
      if (decimal) result["decimal"] = r.value.to_decimal(*decimal);
      emit(g, "limit", {{"n", n.to_string()}, {"m", m.to_string()}, {"x", xj}}, result, start, text);
      return kExitOk;
    }

    if (*perfect) {
      EvenPerfectOptions opts;
      opts.mersenne_only = mersenne_only;
      opts.max_count = 64;
      const auto terms = even_perfect_sequence(count, x, opts);
      const PositiveRational lim = even_perfect_limit(x);
      const std::size_t digits = decimal.value_or(12);
      std::string text = "limit " + with_decimal(lim, decimal) + "\np\tN\tI(x,N)\tdistance\n";
      Json rows = Json::array();
      for (const auto& t : terms) {
        const std::string dist = abs_difference_decimal(t.index, lim, digits);
        text += t.p.to_string() + "\t" + t.n.to_string() + "\t" + with_decimal(t.index, decimal) + "\t" + dist + "\n";
        rows.push_back({{"p", t.p.to_string()},
                        {"N", t.n.to_string()},
                        {"index", t.index.to_string()},
                        {"mersenne_prime", t.mersenne_prime},
                        {"distance", dist}});
      }
      emit(g, "perfect-seq", {{"count", count}, {"x", xj}, {"mersenne_only", mersenne_only}},
           {{"limit", lim.to_string()}, {"terms", rows}}, start, text);
      return kExitOk;
    }

    if (*search) {
      const PositiveRational q = parse_fraction(q_text);
      if (!q.greater_than_one()) throw UsageError("q = " + q.to_string() + " must exceed 1");
      const auto r = oracle::search_witness(q, x, bound, {.pruned = !unpruned, .threads = g.threads});
      std::string text = "q = " + q.to_string() + ", x = " + std::to_string(x) + ", bound = " + std::to_string(bound) +
                         ", step = " + r.step.to_string() + ", scanned = " + std::to_string(r.scanned) + "\n";
      text += r.witness ? "witness: " + r.witness->to_string() + "\n" : "no witness\n";
      Json result{{"witness", r.witness ? Json(r.witness->to_string()) : Json()},
                  {"step", r.step.to_string()},
                  {"scanned", r.scanned}};
      emit(g, "search", {{"q", q.to_string()}, {"x", xj}, {"bound", bound}, {"pruned", !unpruned}}, result, start,
           text);
      return kExitOk;
    }

    if (*image) {
      const oracle::ImageTable table = no_cache ? oracle::image_enumerate(x, image_bound, g.threads)
                                                : ImageCache(ImageCache::default_directory())
                                                      .load_or_build(x, image_bound, g.threads);
      std::vector<std::pair<Natural, PositiveRational>> rows;
      for (const auto& [q, w] : table.entries) rows.emplace_back(w, q);
      std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::string text;
      Json entries = Json::array();
      for (const auto& [w, q] : rows) {
        if (g.json) {
          entries.push_back({{"value", q.to_string()}, {"witness", w.to_string()}});
        } else {
          text += q.to_string() + "\t" + w.to_string() + "\n";
        }
      }
      text += "# " + std::to_string(rows.size()) + " distinct values for n <= " + std::to_string(image_bound) + "\n";
      emit(g, "image", {{"x", xj}, {"bound", image_bound}}, {{"count", rows.size()}, {"entries", entries}}, start,
           text);
      return kExitOk;
    }

    if (*selfcheck) {
      sc.threads = g.threads;
      sc.cache_dir = ImageCache::default_directory();
      const SelfcheckReport report = run_selfcheck(sc);
      std::string text = "property\tresult\tsamples\n";
      Json props = Json::array();
      for (const auto& p : report.properties) {
        text += p.name + "\t" + (p.passed ? "pass" : "FAIL") + "\t" + std::to_string(p.samples) + "\n";
        if (!p.passed) text += "  counterexample: " + p.counterexample + "\n";
        props.push_back({{"name", p.name},
                         {"passed", p.passed},
                         {"samples", p.samples},
                         {"counterexample", p.counterexample}});
      }
      Json violations = Json::array();
      for (const auto& v : report.violations) {
        text += "violation: " + oracle::to_string(v) + "\n";
        violations.push_back(oracle::to_string(v));
      }
      text += report.ok() ? "selfcheck passed\n" : "selfcheck FAILED\n";
      emit(g, "selfcheck",
           {{"bound", sc.bound}, {"x_max", sc.x_max}, {"seed", sc.seed}, {"inject_forged", sc.inject_forged}},
           {{"ok", report.ok()}, {"properties", props}, {"violations", violations}}, start, text);
      return report.ok() ? kExitOk : kExitSelfcheckFailed;
    }

    if (*odd) {
      const Natural n = parse_positive(n_text, "n");
      const Natural p = parse_positive(p_text, "p");
      const Natural alpha = parse_positive(alpha_text, "alpha");
      const OddPerfectCheck c = odd_perfect_check(n, p, alpha);
      std::string text = "target " + c.target.to_string() + ", I(1, n) = " + c.index.to_string() + "\n";
      text += "index matches: " + std::string(c.index_matches ? "yes" : "no") +
              ", p divides n: " + std::string(c.p_divides_n ? "yes" : "no") + "\n";
      if (c.criterion_met) {
        text += "!!! CRITERION MET: n times p^alpha would be an odd perfect number candidate !!!\n";
      }
      emit(g, "odd-perfect-check", {{"n", n.to_string()}, {"p", p.to_string()}, {"alpha", alpha.to_string()}},
           {{"target", c.target.to_string()},
            {"index", c.index.to_string()},
            {"index_matches", c.index_matches},
            {"p_divides_n", c.p_divides_n},
            {"criterion_met", c.criterion_met}},
           start, text);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
