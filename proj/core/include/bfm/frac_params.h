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

// Constants of the mechanisms that compare against a fractional relaxation
// with integrality gap at most rho.

#ifndef BFM_FRAC_PARAMS_H_
#define BFM_FRAC_PARAMS_H_

#include "bfm/rational.h"
#include "bfm/surd.h"

namespace bfm {

// rho + 1 + sqrt(rho^2 + 4 rho + 1).
Surd GuardFactor(const Rational& rho);
// (1 + rho)(2 + rho + sqrt(rho^2 + 4 rho + 1)) - 1.
Surd SingleItemFactor(const Rational& rho);

struct FracMechanismParams {
  Rational rho;
  Surd inner_guard;            // guard factor of the inner mechanism
  Surd outer_guard;            // single-item guard of the outer mechanism
  Rational outer_guard_upper;  // rational upper bound of outer_guard
  Rational eps;
  int search_eps_log2 = 0;     // search_eps = 2^-search_eps_log2
  Rational search_eps;         // accuracy of the local search
  Rational gamma;              // 1 - (outer_guard_upper + 2) search_eps
};

// With s = search_eps and h = (1 - (outer_guard + 2) s) / 2, checks
//   (1 + h) inner_guard / ((1 - s) h inner_guard - rho)
//       <= inner_guard + 1 + inner_slack
// and that the denominator is positive.
bool SearchEpsConditionHolds(const Rational& rho, const Rational& outer_guard,
                             const Rational& inner_slack,
                             const Rational& search_eps);

// Largest 2^-k, 1 <= k <= 64, passing SearchEpsConditionHolds with
// inner_slack = eps / (rho + 1). Returns k; throws std::domain_error if none.
int SolveSearchEps(const Rational& rho, const Rational& eps,
                   const Rational& outer_guard);
// Same with outer_guard = SingleItemFactor(rho), rounded up.
int SolveSearchEps(const Rational& rho, const Rational& eps);

// Parameters of the generic mechanism for relaxation gap rho.
FracMechanismParams MakeFracParams(const Rational& rho, const Rational& eps);

// Parameters of the variant for weighted cut with a fixed single-item
// constant: the inner mechanism uses rho' = 2 + 8 / outer_guard.
FracMechanismParams MakeTunedCutParams(const Rational& outer_guard,
                                       const Rational& eps);

}  // namespace bfm

#endif  // BFM_FRAC_PARAMS_H_
