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

#include "bfm/surd.h"

#include <stdexcept>

namespace bfm {
namespace {

// floor(sqrt(d) * 2^bits) / 2^bits and the next grid point above.
void SqrtBracket(const Rational& d, int bits, Rational* lo, Rational* hi) {
  if (sgn(d) < 0) throw std::invalid_argument("negative radicand");
  // sqrt(a/b) = sqrt(a*b)/b.
  mpz_class ab = d.get_num() * d.get_den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  mpz_class scaled = ab * scale * scale;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  const mpz_class den = d.get_den() * scale;
  *lo = Rational(root, den);
  lo->canonicalize();
  if (root * root == scaled) {
    *hi = *lo;
  } else {
    *hi = Rational(root + 1, den);
    hi->canonicalize();
  }
}

}  // namespace

int SignOfSurd(const Rational& u, const Rational& w, const Rational& d) {
  if (sgn(d) < 0) throw std::invalid_argument("negative radicand");
  const int su = sgn(u);
  const int sw = sgn(d) == 0 ? 0 : sgn(w);
  if (sw == 0) return su;
  if (su >= 0 && sw > 0) return 1;
  if (su <= 0 && sw < 0) return -1;
  // Opposite signs: compare u^2 against w^2 d.
  const int order = cmp(Rational(u * u), Rational(w * w * d));
  if (order == 0) return 0;
  // If |u| dominates the sign is that of u.
  return order > 0 ? su : sw;
}

bool SurdTimesAtLeast(const Surd& factor, const Rational& x,
                      const Rational& y) {
  return SignOfSurd(factor.p * x - y, factor.q * x, factor.d) >= 0;
}

Rational SurdLowerBound(const Surd& s, int bits) {
  Rational lo, hi;
  SqrtBracket(s.d, bits, &lo, &hi);
  return sgn(s.q) >= 0 ? Rational(s.p + s.q * lo) : Rational(s.p + s.q * hi);
}

Rational SurdUpperBound(const Surd& s, int bits) {
  Rational lo, hi;
  SqrtBracket(s.d, bits, &lo, &hi);
  return sgn(s.q) >= 0 ? Rational(s.p + s.q * hi) : Rational(s.p + s.q * lo);
}

std::string SurdToString(const Surd& s) {
  if (sgn(s.q) == 0 || sgn(s.d) == 0) return ToString(s.p);
  return ToString(s.p) + " + " + ToString(s.q) + "*sqrt(" + ToString(s.d) +
         ")";
}

}  // namespace bfm
