// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bfm/rational.h"

#include <cctype>
#include <stdexcept>

namespace bfm {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Simplest rational in [lo, hi] for 0 <= lo <= hi.
Rational SimplestNonNegative(const Rational& lo, const Rational& hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational inner_lo = 1 / (hi - fl);
  const Rational inner_hi = 1 / (lo - fl);
  Rational result = Rational(fl) + 1 / SimplestNonNegative(inner_lo, inner_hi);
  result.canonicalize();
  return result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const std::size_t slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : s.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string ToString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string ToDecimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = abs(value) * scale;
  // Round half away from zero.
  mpz_class rounded;
  const Rational shifted = scaled + Rational(1, 2);
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(),
             shifted.get_den_mpz_t());
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(value) < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

Rational InversePowerOfTwo(int k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(mpz_class(1), den);
}

Rational SimplestBetween(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("SimplestBetween: lo > hi");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(lo) > 0) return SimplestNonNegative(lo, hi);
  return -SimplestNonNegative(-hi, -lo);
}

mpz_class CommonDenominator(const std::vector<Rational>& values) {
  mpz_class result = 1;
  for (const Rational& v : values) {
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.get_den_mpz_t());
  }
  return result;
}

std::size_t HashRational(const Rational& value) {
  const std::size_t a = mpz_get_ui(value.get_num_mpz_t());
  const std::size_t b = mpz_get_ui(value.get_den_mpz_t());
  const std::size_t s = static_cast<std::size_t>(sgn(value) + 1);
  std::size_t h = a * 0x9E3779B97F4A7C15ull;
  h ^= b + 0x7F4A7C15ull + (h << 6) + (h >> 2);
  h ^= s + (h << 6) + (h >> 2);
  return h;
}

}  // namespace bfm
