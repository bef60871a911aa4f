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

// Independent reference computations for tests. Plain trial division and
// direct divisor sums on machine integers and raw GMP values; nothing here
// calls into the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abundancy/rational.hpp"

namespace abundancy::reference {

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

inline mpz_class power(std::uint64_t base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Σ_{d|n} d^x by pairing d with n/d.
inline mpz_class sigma(std::uint64_t n, unsigned x) {
  mpz_class s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += power(d, x);
    if (d != n / d) s += power(n / d, x);
  }
  return s;
}

inline mpq_class index(std::uint64_t n, unsigned x) {
  mpq_class q(sigma(n, x), power(n, x));
  q.canonicalize();
  return q;
}

inline mpq_class to_mpq(const PositiveRational& q) {
  mpq_class r(q.num().mpz(), q.den().mpz());
  r.canonicalize();
  return r;
}

inline std::string str(const mpq_class& q) { return q.get_str(); }

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace abundancy::reference
