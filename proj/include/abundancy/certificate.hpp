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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abundancy/natural.hpp"
#include "abundancy/outcome.hpp"
#include "abundancy/rational.hpp"

namespace abundancy {

/// k/m^x with m^x < k < σ_x(m) and gcd(k, m^x) = 1.
struct T1Certificate {
  Natural m;
  friend bool operator==(const T1Certificate&, const T1Certificate&) = default;
};

/// (σ_x(n)+t)/n^x, certified through the prime p = p_j (zero-based index j
/// into the factorization of n) and a divisor d^x > 1 of σ_x(p_j^{k_j}).
struct T2Certificate {
  Natural n;
  Natural t;
  std::size_t j = 0;
  Natural p;
  Natural d;
  int case_id = 2;  // 1 or 2
  friend bool operator==(const T2Certificate&, const T2Certificate&) = default;
};

/// k/(l m^x) through a divisor n^x of l m^x and a divisor d^x of
/// σ_x(n) (l m^x / n^x); j (zero-based) selects the prime p = p_j whose
/// ratio bound d meets.
struct T3Certificate {
  Natural n;
  Natural l;
  Natural m;
  std::size_t j = 0;
  Natural p;
  Natural d;
  friend bool operator==(const T3Certificate&, const T3Certificate&) = default;
};

/// (1 + p^s)/p^s = I(s, p) examined at exponent 1, for prime p and s > 1.
struct PrimePowerCertificate {
  Natural p;
  std::uint32_t x_src = 2;
  friend bool operator==(const PrimePowerCertificate&, const PrimePowerCertificate&) = default;
};

using Certificate = std::variant<T1Certificate, T2Certificate, T3Certificate, PrimePowerCertificate>;

/// "T1", "T2", "T3" or "PrimePowerX".
std::string_view theorem_name(const Certificate& cert);

/// Re-verifies every hypothesis of the certificate's theorem for q at
/// exponent x from scratch. Shares no predicate code with the searches that
/// produce certificates.
Verification verify_certificate(const PositiveRational& q, std::uint32_t x, const Certificate& cert);

/// Search limits for the decision procedures and the witness search.
struct EffortBudget {
  std::uint64_t witness_bound = 1'000'000;
  std::uint64_t divisor_enum_cap = 100'000;
  std::uint64_t t_max = 50;
  /// Worker threads for the witness search; 0 means hardware concurrency.
  unsigned threads = 0;
};

struct IndexVerdict {
  Natural witness;
};

struct OutlawVerdict {
  Certificate certificate;
};

struct UnknownVerdict {};

using Verdict = std::variant<IndexVerdict, OutlawVerdict, UnknownVerdict>;

/// Another index implied by this one, with its witness.
struct ImpliedIndex {
  PositiveRational value;
  Natural witness;
  std::string rule;  // "divisor-propagation" or "corollary"
};

struct Classification {
  Verdict verdict = UnknownVerdict{};
  PositiveRational q;
  std::uint32_t x = 1;
  EffortBudget effort;
  std::vector<std::string> notes;
  std::vector<ImpliedIndex> implied;

  bool is_index() const { return std::holds_alternative<IndexVerdict>(verdict); }
  bool is_outlaw() const { return std::holds_alternative<OutlawVerdict>(verdict); }
  bool is_unknown() const { return std::holds_alternative<UnknownVerdict>(verdict); }
};

/// "index", "outlaw" or "unknown".
std::string_view verdict_name(const Verdict& verdict);

}  // namespace abundancy
