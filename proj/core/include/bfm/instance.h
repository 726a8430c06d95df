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

#ifndef BFM_INSTANCE_H_
#define BFM_INSTANCE_H_

#include <memory>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/rational.h"
#include "bfm/valuation.h"

namespace bfm {

// A procurement instance: agents 0..n-1 with costs, a budget and a value
// oracle. Copies share the oracle.
class Instance {
 public:
  // `origin[i]` lists the agents of some earlier instance that agent i
  // stands for (see NormalizeCosts); defaults to {i}.
  Instance(std::vector<Rational> costs, Rational budget,
           std::shared_ptr<const Valuation> valuation,
           std::vector<AgentSet> origin = {});

  int n() const { return static_cast<int>(costs_.size()); }
  const std::vector<Rational>& costs() const { return costs_; }
  const Rational& cost(int i) const {
    return costs_[static_cast<std::size_t>(i)];
  }
  const Rational& budget() const { return budget_; }
  const Valuation& valuation() const { return *valuation_; }
  const std::shared_ptr<const Valuation>& valuation_ptr() const {
    return valuation_;
  }
  const std::vector<AgentSet>& origin() const { return origin_; }

  AgentSet agents() const { return AgentSet::Full(n()); }
  // Agents with cost at most the budget.
  AgentSet Affordable() const;
  AgentSet Affordable(AgentSet ground) const { return Affordable() & ground; }

  Rational Value(AgentSet s) const { return valuation_->Value(s); }
  // v(S + i) - v(S); throws std::invalid_argument if i is in S.
  Rational Marginal(AgentSet s, int i) const;
  Rational CostOf(AgentSet s) const;
  bool Feasible(AgentSet s) const { return CostOf(s) <= budget_; }

  // Same valuation and budget, new cost vector (typically bids).
  Instance WithCosts(std::vector<Rational> costs) const;
  Instance WithValuation(std::shared_ptr<const Valuation> valuation) const;
  // Same instance backed by a precomputed value table when small.
  Instance Memoized() const;

  // Maps a set of this instance's agents to the agents they stand for.
  AgentSet ToOrigin(AgentSet s) const;

 private:
  std::vector<Rational> costs_;
  Rational budget_;
  std::shared_ptr<const Valuation> valuation_;
  std::vector<AgentSet> origin_;
};

}  // namespace bfm

#endif  // BFM_INSTANCE_H_
