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

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "abundancy/natural.hpp"

namespace abundancy {

/// Exact positive fraction, always held in lowest terms.
///
/// Construction canonicalizes, so two equal values always have identical
/// numerators and denominators; equality is component-wise.
class PositiveRational {
 public:
  /// The value 1.
  PositiveRational() : num_(1), den_(1) {}

  PositiveRational(Natural num, Natural den);

  PositiveRational(Natural value)  // NOLINT(google-explicit-constructor)
      : PositiveRational(std::move(value), Natural(1)) {}

  /// Accepts "a/b" or "a" with decimal digits and no whitespace.
  static PositiveRational parse(std::string_view text);

  const Natural& num() const { return num_; }
  const Natural& den() const { return den_; }

  bool is_integer() const { return den_.is_one(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool greater_than_one() const { return num_ > den_; }

  PositiveRational reciprocal() const { return PositiveRational(den_, num_); }

  /// "a/b", or "a" when the denominator is 1.
  std::string to_string() const;

  /// Truncated decimal expansion with exactly `digits` fractional digits.
  std::string to_decimal(std::size_t digits) const;

  friend PositiveRational operator*(const PositiveRational& a, const PositiveRational& b);
  friend PositiveRational operator/(const PositiveRational& a, const PositiveRational& b);
  friend PositiveRational operator+(const PositiveRational& a, const PositiveRational& b);

  friend bool operator==(const PositiveRational& a, const PositiveRational& b) = default;
  friend std::strong_ordering operator<=>(const PositiveRational& a, const PositiveRational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const PositiveRational& q) {
    return os << q.to_string();
  }

 private:
  Natural num_;
  Natural den_;
};

/// Exact test of |a - b| < tolerance.
bool within(const PositiveRational& a, const PositiveRational& b, const PositiveRational& tolerance);

/// |a - b| rendered with `digits` fractional digits (truncated).
std::string abs_difference_decimal(const PositiveRational& a, const PositiveRational& b,
                                   std::size_t digits);

/// Reads a plain decimal such as "2.6666" back into an exact fraction.
PositiveRational parse_decimal(std::string_view text);

}  // namespace abundancy

template <>
struct std::hash<abundancy::PositiveRational> {
  std::size_t operator()(const abundancy::PositiveRational& q) const noexcept {
    const std::size_t h = std::hash<abundancy::Natural>{}(q.num());
    return h ^ (std::hash<abundancy::Natural>{}(q.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
