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

#include "bfm/instance.h"

#include <stdexcept>
#include <utility>

namespace bfm {

Instance::Instance(std::vector<Rational> costs, Rational budget,
                   std::shared_ptr<const Valuation> valuation,
                   std::vector<AgentSet> origin)
    : costs_(std::move(costs)),
      budget_(std::move(budget)),
      valuation_(std::move(valuation)),
      origin_(std::move(origin)) {
  if (valuation_ == nullptr) throw std::invalid_argument("missing valuation");
  if (static_cast<int>(costs_.size()) != valuation_->n()) {
    throw std::invalid_argument("cost vector length differs from n");
  }
  if (sgn(budget_) <= 0) throw std::invalid_argument("budget must be > 0");
  for (const Rational& c : costs_) {
    if (sgn(c) < 0) throw std::invalid_argument("negative cost");
  }
  if (origin_.empty()) {
    for (int i = 0; i < n(); ++i) origin_.push_back(AgentSet::Single(i));
  } else if (static_cast<int>(origin_.size()) != n()) {
    throw std::invalid_argument("origin map length differs from n");
  }
}

AgentSet Instance::Affordable() const {
  AgentSet out;
  for (int i = 0; i < n(); ++i) {
    if (cost(i) <= budget_) out = out.with(i);
  }
  return out;
}

Rational Instance::Marginal(AgentSet s, int i) const {
  if (s.contains(i)) {
    throw std::invalid_argument("marginal of agent " + std::to_string(i + 1) +
                                " already in " + s.ToString());
  }
  return Value(s.with(i)) - Value(s);
}

Rational Instance::CostOf(AgentSet s) const {
  Rational total = 0;
  for (int i : s) total += cost(i);
  return total;
}

Instance Instance::WithCosts(std::vector<Rational> costs) const {
  return Instance(std::move(costs), budget_, valuation_, origin_);
}

Instance Instance::WithValuation(
    std::shared_ptr<const Valuation> valuation) const {
  return Instance(costs_, budget_, std::move(valuation), origin_);
}

Instance Instance::Memoized() const { return WithValuation(Memoize(valuation_)); }

AgentSet Instance::ToOrigin(AgentSet s) const {
  AgentSet out;
  for (int i : s) out = out | origin_[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace bfm
