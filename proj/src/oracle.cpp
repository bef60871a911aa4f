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

#include "abundancy/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "abundancy/divisor_core.hpp"

namespace abundancy::oracle {
namespace {

using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Integer back ends for the scan: u128 when every σ_x(n) and n^x for
// n <= bound fits, GMP otherwise.

u128 gcd_int(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class gcd_int(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

template <typename Int>
Int pow_int(std::uint64_t base, std::uint32_t x) {
  if constexpr (std::is_same_v<Int, u128>) {
    u128 r = 1;
    for (std::uint32_t i = 0; i < x; ++i) r *= base;
    return r;
  } else {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, x);
    return r;
  }
}

bool u128_is_enough(std::uint64_t bound, std::uint32_t x) {
  std::uint64_t bits = 0;
  while ((bound >> bits) != 0) ++bits;
  // σ_x(n) < 8 n^x for every x >= 1 and n <= kMaxScanBound.
  return bits * x + 4 <= 124;
}

template <typename Int>
struct Key {
  Int num;
  Int den;
  friend bool operator==(const Key& a, const Key& b) { return a.num == b.num && a.den == b.den; }
};

struct KeyHash {
  static std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  static std::size_t of(u128 v) {
    return mix(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64));
  }
  static std::size_t of(const mpz_class& v) { return std::hash<Natural>{}(Natural(v)); }
  template <typename Int>
  std::size_t operator()(const Key<Int>& k) const {
    return mix(of(k.num), of(k.den));
  }
};

Natural to_natural(u128 v) {
  mpz_class r = static_cast<unsigned long>(v >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return Natural(std::move(r));
}

Natural to_natural(const mpz_class& v) { return Natural(v); }

std::optional<u128> to_u128(const Natural& n) {
  if (n.bit_length() > 128) return std::nullopt;
  mpz_class hi = n.mpz() >> 64;
  mpz_class lo = n.mpz() - (hi << 64);
  return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

template <typename Int>
std::optional<Key<Int>> key_of(const PositiveRational& q) {
  if constexpr (std::is_same_v<Int, u128>) {
    const auto num = to_u128(q.num());
    const auto den = to_u128(q.den());
    if (!num || !den) return std::nullopt;
    return Key<u128>{*num, *den};
  } else {
    return Key<mpz_class>{q.num().mpz(), q.den().mpz()};
  }
}

template <typename Int>
PositiveRational to_rational(const Key<Int>& k) {
  return PositiveRational(to_natural(k.num), to_natural(k.den));
}

// Evaluates I(x, n) from the definition: enumerate the divisors of n and
// sum their x-th powers.
class Evaluator {
 public:
  Evaluator(const SmallestFactorSieve& sieve, std::uint32_t x) : sieve_(sieve), x_(x) {}

  template <typename Int>
  Key<Int> index(std::uint32_t n) {
    sieve_.factor(n, factors_);
    divisors_.assign(1, 1);
    for (const auto& [p, e] : factors_) {
      const std::size_t existing = divisors_.size();
      std::uint64_t power = 1;
      for (std::uint32_t i = 0; i < e; ++i) {
        power *= p;
        for (std::size_t j = 0; j < existing; ++j) divisors_.push_back(divisors_[j] * power);
      }
    }
    Int sigma = 0;
    for (const std::uint64_t d : divisors_) sigma += pow_int<Int>(d, x_);
    Int nx = pow_int<Int>(n, x_);
    const Int g = gcd_int(sigma, nx);
    return Key<Int>{sigma / g, nx / g};
  }

 private:
  const SmallestFactorSieve& sieve_;
  std::uint32_t x_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
  std::vector<std::uint64_t> divisors_;
};

// ---------------------------------------------------------------------------
// Range partitioning. Blocks are contiguous and ascending, so "first hit in
// a block" and "minimum over blocks" give the global smallest witness no
// matter how the workers are scheduled.

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Block {
  std::uint64_t lo;
  std::uint64_t hi;  // inclusive
};

std::vector<Block> partition(std::uint64_t lo, std::uint64_t hi, unsigned threads) {
  std::vector<Block> blocks;
  if (hi < lo) return blocks;
  const std::uint64_t total = hi - lo + 1;
  const std::uint64_t count = std::min<std::uint64_t>(resolve_threads(threads), total);
  const std::uint64_t base = total / count;
  std::uint64_t extra = total % count;
  std::uint64_t start = lo;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t len = base + (extra > 0 ? 1 : 0);
    if (extra > 0) --extra;
    blocks.push_back({start, start + len - 1});
    start += len;
  }
  return blocks;
}

template <typename Fn>
void run_blocks(const std::vector<Block>& blocks, Fn fn) {
  if (blocks.size() <= 1) {
    for (std::size_t i = 0; i < blocks.size(); ++i) fn(i, blocks[i]);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) workers.emplace_back([&fn, &blocks, i] { fn(i, blocks[i]); });
  for (auto& w : workers) w.join();
}

void require_scan_args(std::uint32_t x, std::uint64_t bound) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
  if (bound > kMaxScanBound) {
    throw std::domain_error("scan bound " + std::to_string(bound) + " exceeds the maximum " +
                            std::to_string(kMaxScanBound));
  }
}

// ---------------------------------------------------------------------------

template <typename Int>
std::optional<std::uint64_t> search_impl(const PositiveRational& q, std::uint32_t x, std::uint64_t bound,
                                         std::uint64_t step, unsigned threads, std::uint64_t& scanned) {
  const std::uint64_t multiples = bound / step;
  scanned = multiples;
  const auto target = key_of<Int>(q);
  if (!target || multiples == 0) return std::nullopt;

  const SmallestFactorSieve sieve(bound);
  const auto blocks = partition(1, multiples, threads);
  std::vector<std::optional<std::uint64_t>> found(blocks.size());
  run_blocks(blocks, [&](std::size_t b, Block block) {
    Evaluator eval(sieve, x);
    for (std::uint64_t i = block.lo; i <= block.hi; ++i) {
      const std::uint64_t n = i * step;
      if (eval.index<Int>(static_cast<std::uint32_t>(n)) == *target) {
        found[b] = n;
        return;
      }
    }
  });
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

template <typename Int>
std::vector<std::pair<PositiveRational, Natural>> extend_impl(std::uint32_t x, std::uint64_t lo,
                                                              std::uint64_t hi, const ImageTable& known,
                                                              unsigned threads) {
  const SmallestFactorSieve sieve(hi);
  const auto blocks = partition(lo, hi, threads);
  std::vector<std::unordered_map<Key<Int>, std::uint64_t, KeyHash>> firsts(blocks.size());
  run_blocks(blocks, [&](std::size_t b, Block block) {
    Evaluator eval(sieve, x);
    auto& mine = firsts[b];
    for (std::uint64_t n = block.lo; n <= block.hi; ++n) {
      mine.try_emplace(eval.index<Int>(static_cast<std::uint32_t>(n)), n);
    }
  });

  std::unordered_map<Key<Int>, std::uint64_t, KeyHash> merged;
  for (auto& block_map : firsts) {
    for (auto& [key, n] : block_map) {
      auto [it, inserted] = merged.try_emplace(key, n);
      if (!inserted && n < it->second) it->second = n;
    }
    block_map.clear();
  }

  std::vector<std::pair<PositiveRational, Natural>> out;
  out.reserve(merged.size());
  for (const auto& [key, n] : merged) {
    PositiveRational value = to_rational(key);
    if (known.entries.contains(value)) continue;
    out.emplace_back(std::move(value), Natural(n));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

template <typename Int>
std::vector<std::optional<Natural>> find_impl(std::uint32_t x, std::uint64_t bound,
                                              const std::vector<PositiveRational>& targets, unsigned threads) {
  std::vector<std::optional<Natural>> result(targets.size());
  std::unordered_map<Key<Int>, std::vector<std::size_t>, KeyHash> wanted;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (const auto key = key_of<Int>(targets[i])) wanted[*key].push_back(i);
  }
  if (wanted.empty() || bound == 0) return result;

  const SmallestFactorSieve sieve(bound);
  const auto blocks = partition(1, bound, threads);
  std::vector<std::vector<std::optional<std::uint64_t>>> hits(blocks.size(),
                                                              std::vector<std::optional<std::uint64_t>>(targets.size()));
  run_blocks(blocks, [&](std::size_t b, Block block) {
    Evaluator eval(sieve, x);
    auto& mine = hits[b];
    for (std::uint64_t n = block.lo; n <= block.hi; ++n) {
      const auto it = wanted.find(eval.index<Int>(static_cast<std::uint32_t>(n)));
      if (it == wanted.end()) continue;
      for (const std::size_t t : it->second) {
        if (!mine[t]) mine[t] = n;
      }
    }
  });
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (const auto& block_hits : hits) {
      if (block_hits[t]) {
        result[t] = Natural(*block_hits[t]);
        break;
      }
    }
  }
  return result;
}

}  // namespace

SmallestFactorSieve::SmallestFactorSieve(std::uint64_t limit) {
  if (limit > kMaxScanBound) throw std::domain_error("sieve limit exceeds the maximum scan bound");
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      const std::uint64_t composite = i * p;
      if (p > spf_[i] || composite > limit) break;
      spf_[composite] = p;
    }
  }
}

void SmallestFactorSieve::factor(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) const {
  out.clear();
  if (n == 0 || n > limit()) throw std::out_of_range("sieve cannot factor " + std::to_string(n));
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
}

Natural sigma_by_divisors(const Factorization& n, std::uint32_t x) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
  Natural sum(0);
  for (const Natural& d : divisors(n)) sum += pow(d, x);
  return sum;
}

Natural mandatory_divisor(const PositiveRational& q, std::uint32_t x) {
  return xth_root_ceiling(factorize(q.den()), x).value();
}

SearchReport search_witness(const PositiveRational& q, std::uint32_t x, std::uint64_t bound,
                            const SearchOptions& options) {
  require_scan_args(x, bound);
  if (!q.greater_than_one()) throw std::domain_error("search_witness: q must exceed 1");
  const auto start = std::chrono::steady_clock::now();

  SearchReport report;
  report.q = q;
  report.x = x;
  report.bound = bound;
  report.step = options.pruned ? mandatory_divisor(q, x) : Natural(1);

  if (report.step.fits_u64() && report.step.to_u64() <= bound) {
    const std::uint64_t step = report.step.to_u64();
    std::optional<std::uint64_t> hit;
    if (u128_is_enough(bound, x)) {
      hit = search_impl<u128>(q, x, bound, step, options.threads, report.scanned);
    } else {
      hit = search_impl<mpz_class>(q, x, bound, step, options.threads, report.scanned);
    }
    if (hit) report.witness = Natural(*hit);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::optional<Natural> ImageTable::witness_of(const PositiveRational& q) const {
  const auto it = entries.find(q);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<PositiveRational, Natural>> image_extend(std::uint32_t x, std::uint64_t lo,
                                                               std::uint64_t hi, const ImageTable& known,
                                                               unsigned threads) {
  require_scan_args(x, hi);
  if (lo == 0) lo = 1;
  if (hi < lo) return {};
  if (u128_is_enough(hi, x)) return extend_impl<u128>(x, lo, hi, known, threads);
  return extend_impl<mpz_class>(x, lo, hi, known, threads);
}

ImageTable image_enumerate(std::uint32_t x, std::uint64_t bound, unsigned threads) {
  ImageTable table;
  table.x = x;
  table.bound = bound;
  for (auto& [value, n] : image_extend(x, 1, bound, table, threads)) table.entries.emplace(std::move(value), std::move(n));
  return table;
}

std::vector<std::optional<Natural>> find_in_image(std::uint32_t x, std::uint64_t bound,
                                                  const std::vector<PositiveRational>& targets,
                                                  unsigned threads) {
  require_scan_args(x, bound);
  if (u128_is_enough(bound, x)) return find_impl<u128>(x, bound, targets, threads);
  return find_impl<mpz_class>(x, bound, targets, threads);
}

std::string to_string(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case Violation::Kind::kOutlawHasWitness:
      os << "outlaw certificate contradicted";
      break;
    case Violation::Kind::kBadWitness:
      os << "index witness does not verify";
      break;
    case Violation::Kind::kBadCertificate:
      os << "certificate rejected";
      break;
    case Violation::Kind::kExponentMismatch:
      os << "exponent mismatch";
      break;
  }
  os << ": q=" << v.q << " x=" << v.x;
  if (v.witness) os << " witness=" << *v.witness;
  if (!v.detail.empty()) os << " (" << v.detail << ")";
  return os.str();
}

std::vector<Violation> consistency_audit(std::uint32_t x, std::uint64_t bound,
                                         const std::vector<Classification>& corpus, unsigned threads) {
  std::vector<Violation> violations;
  std::vector<PositiveRational> outlaws;
  std::vector<std::string> theorems;
  for (const Classification& c : corpus) {
    if (c.x != x) {
      violations.push_back({Violation::Kind::kExponentMismatch, c.q, c.x, std::nullopt,
                            "audit runs at x=" + std::to_string(x)});
      continue;
    }
    if (const auto* index = std::get_if<IndexVerdict>(&c.verdict)) {
      const Natural& w = index->witness;
      const bool ok = !w.is_zero() &&
                      PositiveRational(sigma_by_divisors(factorize(w), x), pow(w, x)) == c.q;
      if (!ok) violations.push_back({Violation::Kind::kBadWitness, c.q, x, w, "I(x, witness) differs from q"});
    } else if (const auto* outlaw = std::get_if<OutlawVerdict>(&c.verdict)) {
      outlaws.push_back(c.q);
      theorems.emplace_back(theorem_name(outlaw->certificate));
    }
  }
  const auto found = find_in_image(x, bound, outlaws, threads);
  for (std::size_t i = 0; i < outlaws.size(); ++i) {
    if (found[i]) {
      violations.push_back({Violation::Kind::kOutlawHasWitness, outlaws[i], x, found[i],
                            theorems[i] + " certificate, but I(x, witness) = q"});
    }
  }
  return violations;
}

std::vector<Violation> consistency_audit_all(std::uint64_t bound, const std::vector<Classification>& corpus,
                                             unsigned threads) {
  std::map<std::uint32_t, std::vector<Classification>> by_exponent;
  for (const auto& c : corpus) by_exponent[c.x].push_back(c);
  std::vector<Violation> all;
  for (const auto& [x, group] : by_exponent) {
    auto v = consistency_audit(x, bound, group, threads);
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

MonotonicityReport monotonicity_fuzz(std::uint64_t samples, std::uint32_t x_max, std::uint64_t seed) {
  if (x_max == 0) throw std::domain_error("x_max must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_n(1, 1'000'000);
  std::uniform_int_distribution<std::uint64_t> pick_k(2, 1'000);
  std::uniform_int_distribution<std::uint32_t> pick_x(1, x_max);

  MonotonicityReport report;
  report.samples = samples;
  report.seed = seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Natural n(pick_n(rng));
    const Natural k(pick_k(rng));
    const std::uint32_t x = pick_x(rng);
    if (!(abundancy(x, n) < abundancy(x, k * n))) report.counterexamples.push_back({n, k, x});
  }
  return report;
}

}  // namespace abundancy::oracle
