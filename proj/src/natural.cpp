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

#include "abundancy/natural.hpp"

#include <string>

namespace abundancy {

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (const char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
  }
  return Natural(mpz_class(std::string(text), 10));
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural does not fit in 64 bits");
  return value_.get_ui();
}

std::size_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw std::domain_error("Natural: subtraction below zero");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural pow(const Natural& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Natural(std::move(r));
}

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(r));
}

Natural lcm(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(r));
}

bool divides(const Natural& d, const Natural& n) {
  return mpz_divisible_p(n.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

Natural exact_div(const Natural& n, const Natural& d) {
  if (d.is_zero() || !divides(d, n)) {
    throw std::domain_error("exact_div: " + d.to_string() + " does not divide " + n.to_string());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Natural(std::move(r));
}

}  // namespace abundancy

std::size_t std::hash<abundancy::Natural>::operator()(const abundancy::Natural& n) const noexcept {
  const mpz_srcptr z = n.mpz().get_mpz_t();
  std::size_t h = 0;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
