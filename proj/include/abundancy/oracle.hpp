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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abundancy/certificate.hpp"
#include "abundancy/factorization.hpp"
#include "abundancy/natural.hpp"
#include "abundancy/rational.hpp"

// Brute-force ground truth. Values here are computed from the definition
// (σ_x as a sum over enumerated divisors), never from the closed forms the
// rest of the library uses.
namespace abundancy::oracle {

/// Largest bound accepted by scans; the smallest-prime-factor table is
/// 4 bytes per integer.
inline constexpr std::uint64_t kMaxScanBound = 20'000'000;

/// Smallest-prime-factor table for 1..limit.
class SmallestFactorSieve {
 public:
  explicit SmallestFactorSieve(std::uint64_t limit);

  std::uint64_t limit() const { return spf_.empty() ? 0 : spf_.size() - 1; }

  /// Prime powers of n (1 <= n <= limit), ascending.
  void factor(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) const;

 private:
  std::vector<std::uint32_t> spf_;
};

/// Σ_{d|n} d^x by listing every divisor of n.
Natural sigma_by_divisors(const Factorization& n, std::uint32_t x);

/// Smallest r such that every witness of q at exponent x is a multiple of r.
/// A witness n satisfies den(q) | n^x, so each prime exponent e of den(q)
/// forces at least ceil(e/x) in n.
Natural mandatory_divisor(const PositiveRational& q, std::uint32_t x);

struct SearchOptions {
  /// Scan only multiples of mandatory_divisor(q, x). Disable to scan every n.
  bool pruned = true;
  unsigned threads = 0;
};

struct SearchReport {
  PositiveRational q;
  std::uint32_t x = 1;
  std::uint64_t bound = 0;
  std::optional<Natural> witness;  // smallest n <= bound with I(x, n) = q
  Natural step{1};                 // stride used by the scan
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t scanned = 0;
};

SearchReport search_witness(const PositiveRational& q, std::uint32_t x, std::uint64_t bound,
                            const SearchOptions& options = {});

struct ImageTable {
  std::uint32_t x = 1;
  std::uint64_t bound = 0;
  /// Every attained value with its smallest witness.
  std::map<PositiveRational, Natural> entries;

  std::optional<Natural> witness_of(const PositiveRational& q) const;
};

/// All distinct I(x, n) for n <= bound.
ImageTable image_enumerate(std::uint32_t x, std::uint64_t bound, unsigned threads = 0);

/// Values whose smallest witness lies in [lo, hi], given that `known` holds
/// every value attained below lo. Used to extend cached tables.
std::vector<std::pair<PositiveRational, Natural>> image_extend(std::uint32_t x, std::uint64_t lo,
                                                               std::uint64_t hi, const ImageTable& known,
                                                               unsigned threads = 0);

/// For each target, the smallest n <= bound with I(x, n) = target, if any.
/// One unpruned pass over 1..bound.
std::vector<std::optional<Natural>> find_in_image(std::uint32_t x, std::uint64_t bound,
                                                  const std::vector<PositiveRational>& targets,
                                                  unsigned threads = 0);

struct Violation {
  enum class Kind { kOutlawHasWitness, kBadWitness, kBadCertificate, kExponentMismatch };
  Kind kind;
  PositiveRational q;
  std::uint32_t x = 1;
  std::optional<Natural> witness;
  std::string detail;
};

std::string to_string(const Violation& v);

/// Empty iff no Outlaw-certified q of the corpus is attained by any
/// n <= bound and every Index witness re-verifies. Certificates themselves
/// are not re-checked. Entries at another exponent are reported.
std::vector<Violation> consistency_audit(std::uint32_t x, std::uint64_t bound,
                                         const std::vector<Classification>& corpus, unsigned threads = 0);

/// Audits a mixed-exponent corpus, one pass per exponent present.
std::vector<Violation> consistency_audit_all(std::uint64_t bound, const std::vector<Classification>& corpus,
                                             unsigned threads = 0);

struct MonotonicitySample {
  Natural n;
  Natural k;
  std::uint32_t x = 1;
};

struct MonotonicityReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<MonotonicitySample> counterexamples;
};

/// Checks I(x, kn) > I(x, n) on seeded random (n, k, x) with k >= 2.
MonotonicityReport monotonicity_fuzz(std::uint64_t samples, std::uint32_t x_max, std::uint64_t seed);

}  // namespace abundancy::oracle
