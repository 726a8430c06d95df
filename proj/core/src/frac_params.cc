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

#include "bfm/frac_params.h"

#include <stdexcept>

namespace bfm {
namespace {

Rational Radicand(const Rational& rho) { return rho * rho + 4 * rho + 1; }

Surd Times(const Surd& a, const Surd& b) {
  return {a.p * b.p + a.q * b.q * a.d, a.p * b.q + a.q * b.p, a.d};
}

Surd Minus(const Surd& a, const Surd& b) { return {a.p - b.p, a.q - b.q, a.d}; }

}  // namespace

Surd GuardFactor(const Rational& rho) {
  return {rho + 1, 1, Radicand(rho)};
}

Surd SingleItemFactor(const Rational& rho) {
  return {(1 + rho) * (2 + rho) - 1, 1 + rho, Radicand(rho)};
}

bool SearchEpsConditionHolds(const Rational& rho, const Rational& outer_guard,
                             const Rational& inner_slack,
                             const Rational& search_eps) {
  const Rational gamma = 1 - (outer_guard + 2) * search_eps;
  if (sgn(gamma) <= 0 || search_eps >= 1) return false;
  const Rational greedy_share = gamma / 2;
  const Surd inner_guard = GuardFactor(rho);
  const Surd denominator =
      inner_guard * Rational((1 - search_eps) * greedy_share) + Rational(-rho);
  if (Sign(denominator) <= 0) return false;
  const Surd lhs = inner_guard * Rational(1 + greedy_share);
  const Surd rhs = Times(inner_guard + Rational(1 + inner_slack), denominator);
  return Sign(Minus(rhs, lhs)) >= 0;
}

int SolveSearchEps(const Rational& rho, const Rational& eps,
                   const Rational& outer_guard) {
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive");
  const Rational inner_slack = eps / (rho + 1);
  for (int k = 1; k <= 64; ++k) {
    if (SearchEpsConditionHolds(rho, outer_guard, inner_slack,
                               InversePowerOfTwo(k))) {
      return k;
    }
  }
  throw std::domain_error("no eps' of the form 2^-k with k <= 64");
}

int SolveSearchEps(const Rational& rho, const Rational& eps) {
  return SolveSearchEps(rho, eps, SurdUpperBound(SingleItemFactor(rho), 32));
}

FracMechanismParams MakeFracParams(const Rational& rho, const Rational& eps) {
  FracMechanismParams params;
  params.rho = rho;
  params.inner_guard = GuardFactor(rho);
  params.outer_guard = SingleItemFactor(rho);
  params.outer_guard_upper = SurdUpperBound(params.outer_guard, 32);
  params.eps = eps;
  params.search_eps_log2 = SolveSearchEps(rho, eps, params.outer_guard_upper);
  params.search_eps = InversePowerOfTwo(params.search_eps_log2);
  params.gamma = 1 - (params.outer_guard_upper + 2) * params.search_eps;
  return params;
}

FracMechanismParams MakeTunedCutParams(const Rational& outer_guard,
                                       const Rational& eps) {
  FracMechanismParams params;
  params.rho = 2 + 8 / outer_guard;
  params.inner_guard = GuardFactor(params.rho);
  params.outer_guard = Surd::FromRational(outer_guard);
  params.outer_guard_upper = outer_guard;
  params.eps = eps;
  params.search_eps_log2 = SolveSearchEps(params.rho, eps, outer_guard);
  params.search_eps = InversePowerOfTwo(params.search_eps_log2);
  params.gamma = 1 - (outer_guard + 2) * params.search_eps;
  return params;
}

}  // namespace bfm
