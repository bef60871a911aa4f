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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abundancy {

/// Arbitrary-precision non-negative integer.
///
/// A thin value type over GMP's mpz_class. Every operation that could leave
/// the naturals (subtraction below zero, division by zero, negative input)
/// throws std::domain_error instead of producing a signed result.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
    requires(sizeof(T) <= sizeof(long))
  Natural(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw std::domain_error("Natural: negative value");
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Natural(mpz_class v);

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Natural parse(std::string_view text);

  const mpz_class& mpz() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

  bool fits_u64() const { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  std::uint64_t to_u64() const;

  /// Number of bits in the binary representation; 0 for zero.
  std::size_t bit_length() const;

  std::string to_string() const { return value_.get_str(); }

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_.get_str();
  }

 private:
  mpz_class value_;
};

Natural pow(const Natural& base, unsigned long exponent);
Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

/// True iff d divides n. Zero divides only zero.
bool divides(const Natural& d, const Natural& n);

/// Exact quotient; throws std::domain_error when d does not divide n.
Natural exact_div(const Natural& n, const Natural& d);

}  // namespace abundancy

template <>
struct std::hash<abundancy::Natural> {
  std::size_t operator()(const abundancy::Natural& n) const noexcept;
};
