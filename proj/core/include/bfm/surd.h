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

// Exact arithmetic on numbers of the form p + q * sqrt(d).

#ifndef BFM_SURD_H_
#define BFM_SURD_H_

#include <string>

#include "bfm/rational.h"

namespace bfm {

struct Surd {
  Rational p;
  Rational q;
  Rational d;  // radicand, >= 0

  static Surd FromRational(const Rational& value) { return {value, 0, 0}; }

  Surd operator+(const Rational& r) const { return {p + r, q, d}; }
  Surd operator*(const Rational& r) const { return {p * r, q * r, d}; }
};

// Sign of u + w * sqrt(d), decided without approximation.
int SignOfSurd(const Rational& u, const Rational& w, const Rational& d);

inline int Sign(const Surd& s) { return SignOfSurd(s.p, s.q, s.d); }

// Returns true iff factor * x >= y.
bool SurdTimesAtLeast(const Surd& factor, const Rational& x,
                      const Rational& y);

// Returns true iff y <= factor * x, i.e. the ratio y / x is within factor.
inline bool WithinFactor(const Rational& y, const Surd& factor,
                         const Rational& x) {
  return SurdTimesAtLeast(factor, x, y);
}

// Rational bounds lo <= s <= hi with hi - lo <= 2^-bits * |q| (roughly).
Rational SurdLowerBound(const Surd& s, int bits = 96);
Rational SurdUpperBound(const Surd& s, int bits = 96);

std::string SurdToString(const Surd& s);

}  // namespace bfm

#endif  // BFM_SURD_H_
