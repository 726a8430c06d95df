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

#ifndef BFM_RATIONAL_H_
#define BFM_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bfm {

// Every value, cost, weight and budget in the library is an exact rational.
using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q" (decimal integers). Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form; integers are written with an explicit "/1".
std::string ToString(const Rational& value);

// Decimal rendering rounded to `digits` places, for human readable reports.
std::string ToDecimal(const Rational& value, int digits);

// 2^-k.
Rational InversePowerOfTwo(int k);

// The rational with the smallest denominator in the closed interval
// [lo, hi] (smallest numerator magnitude on ties). Requires lo <= hi.
Rational SimplestBetween(const Rational& lo, const Rational& hi);

// Least common multiple of all denominators.
mpz_class CommonDenominator(const std::vector<Rational>& values);

std::size_t HashRational(const Rational& value);

inline int Sign(const Rational& value) { return sgn(value); }

}  // namespace bfm

#endif  // BFM_RATIONAL_H_
