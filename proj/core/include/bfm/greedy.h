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

// Marginal-density greedy procedures. Both recompute marginals against the
// current set after every acceptance. Zero-cost agents with positive marginal
// have infinite density; ties go to the lowest index.

#ifndef BFM_GREEDY_H_
#define BFM_GREEDY_H_

#include <vector>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

// Marginal value per unit cost, with the infinite cases made explicit.
struct Density {
  int infinite = 0;  // +1, -1 or 0 (finite)
  Rational value;    // valid when finite

  static Density Of(const Rational& marginal, const Rational& cost);
  bool operator>(const Density& other) const;
  bool NonNegative() const {
    return infinite > 0 || (infinite == 0 && sgn(value) >= 0);
  }
};

struct GreedyStep {
  int agent = -1;
  Density density;
  Rational marginal;
  Rational value_after;
};

struct GreedyTrace {
  // Agents in density order as examined: the accepted prefix followed by the
  // agent that stopped the scan, if any.
  std::vector<int> order;
  std::vector<GreedyStep> accepted;
  AgentSet final_set;
  Rational budget_arg;
};

// Full adaptive density order of `ground` (argmax of marginal density with
// respect to the prefix placed so far).
std::vector<int> ResortOrder(const Instance& inst, AgentSet ground);

// Scans agents of `ground` in adaptive density order and accepts agent k
// while v(S + k) > v(S) and c_k <= budget_arg * (v(S + k) - v(S)) / v(S + k);
// stops at the first agent that fails.
AgentSet GreedySm(const Instance& inst, AgentSet ground,
                  const Rational& budget_arg, GreedyTrace* trace = nullptr);

// Best feasible set of at most three agents, compared with the density
// greedy completed from every feasible three-agent seed. The greedy skips an
// agent whose density is negative or who would break the budget and goes on
// with the remaining agents.
AgentSet GreedyEnumSm(const Instance& inst, AgentSet ground);

}  // namespace bfm

#endif  // BFM_GREEDY_H_
