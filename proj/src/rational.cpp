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

#include "abundancy/rational.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace abundancy {
namespace {

mpq_class to_mpq(const PositiveRational& q) {
  mpq_class r(q.num().mpz(), q.den().mpz());
  return r;  // already canonical
}

std::string decimal_of(const mpq_class& value, std::size_t digits) {
  // value >= 0 assumed
  mpz_class scaled;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
  mpz_class numer = value.get_num() * ten_pow;
  mpz_fdiv_q(scaled.get_mpz_t(), numer.get_mpz_t(), value.get_den().get_mpz_t());
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, 1, '.');
  return s;
}

}  // namespace

PositiveRational::PositiveRational(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero() || den_.is_zero()) {
    throw std::domain_error("PositiveRational: numerator and denominator must be positive");
  }
  const Natural g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

PositiveRational PositiveRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Natural n = Natural::parse(text);
    if (n.is_zero()) throw std::invalid_argument("fraction '0' is not positive");
    return PositiveRational(std::move(n));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
  }
  Natural num = Natural::parse(text.substr(0, slash));
  Natural den = Natural::parse(text.substr(slash + 1));
  if (num.is_zero() || den.is_zero()) {
    throw std::invalid_argument("fraction '" + std::string(text) + "' is not positive");
  }
  return PositiveRational(std::move(num), std::move(den));
}

std::string PositiveRational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string PositiveRational::to_decimal(std::size_t digits) const {
  return decimal_of(to_mpq(*this), digits);
}

PositiveRational operator*(const PositiveRational& a, const PositiveRational& b) {
  // Cross-reduce first.
  const Natural g1 = gcd(a.num_, b.den_);
  const Natural g2 = gcd(b.num_, a.den_);
  PositiveRational r;
  r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  return r;
}

PositiveRational operator/(const PositiveRational& a, const PositiveRational& b) {
  return a * b.reciprocal();
}

PositiveRational operator+(const PositiveRational& a, const PositiveRational& b) {
  return PositiveRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

bool within(const PositiveRational& a, const PositiveRational& b, const PositiveRational& tolerance) {
  const mpq_class diff = abs(to_mpq(a) - to_mpq(b));
  return diff < to_mpq(tolerance);
}

std::string abs_difference_decimal(const PositiveRational& a, const PositiveRational& b,
                                   std::size_t digits) {
  return decimal_of(abs(to_mpq(a) - to_mpq(b)), digits);
}

PositiveRational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return PositiveRational(Natural::parse(text));
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  const Natural scale = pow(Natural(10), frac.size());
  Natural value = Natural::parse(whole.empty() ? "0" : whole) * scale;
  if (!frac.empty()) value += Natural::parse(frac);
  return PositiveRational(value, scale);
}

}  // namespace abundancy
