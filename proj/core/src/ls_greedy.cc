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

#include "bfm/ls_greedy.h"

#include <stdexcept>

#include "bfm/greedy.h"
#include "bfm/local_search.h"
#include "bfm/structure.h"

namespace bfm {

Instance ScaleToIntegral(const Instance& inst) {
  std::vector<Rational> all = inst.costs();
  all.push_back(inst.budget());
  const Rational scale(CommonDenominator(all));
  if (scale == 1) return inst;
  std::vector<Rational> costs;
  costs.reserve(inst.costs().size());
  for (const Rational& c : inst.costs()) costs.push_back(c * scale);
  return Instance(std::move(costs), inst.budget() * scale,
                  inst.valuation_ptr(), inst.origin());
}

Rational LsGreedyGuarantee(const Rational& eps) {
  // (e - 1) / (2e) = 0.3160602794142788...
  static const Rational kLowerBound =
      ParseRational("316060279414278/1000000000000000");
  return kLowerBound - eps;
}

AgentSet LsGreedy(const Instance& inst, const Rational& eps,
                  LsGreedyReport* report) {
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive");
  const Instance work = ScaleToIntegral(NormalizeCosts(inst)).Memoized();

  const AgentSet side = ApproxLocalSearch(work, eps / 4).set;
  const AgentSet inside = GreedyEnumSm(work, side);
  const AgentSet outside = GreedyEnumSm(work, work.agents() - side);
  const Rational inside_value = work.Value(inside);
  const Rational outside_value = work.Value(outside);

  const AgentSet lifted_inside = LiftFromNormalized(inst, inside);
  const AgentSet lifted_outside = LiftFromNormalized(inst, outside);
  const int c = cmp(inside_value, outside_value);
  const bool take_inside =
      c > 0 || (c == 0 && !LexLess(lifted_outside, lifted_inside));

  if (report != nullptr) {
    report->local_optimum = LiftFromNormalized(inst, side);
    report->inside = lifted_inside;
    report->outside = lifted_outside;
    report->inside_value = inside_value;
    report->outside_value = outside_value;
    report->chosen = take_inside ? "inside" : "outside";
    report->eps = eps;
  }
  return take_inside ? lifted_inside : lifted_outside;
}

}  // namespace bfm
