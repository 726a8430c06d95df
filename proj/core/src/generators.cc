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

#include "bfm/generators.h"

#include <memory>
#include <stdexcept>

#include "bfm/structure.h"
#include "bfm/valuation.h"

namespace bfm {
namespace {

std::vector<Rational> RandomCosts(int n, int lo, int hi, std::mt19937_64& rng) {
  std::vector<Rational> costs;
  for (int i = 0; i < n; ++i) costs.emplace_back(UniformInt(rng, lo, hi));
  return costs;
}

Rational BudgetFor(const std::vector<Rational>& costs,
                   const Rational& fraction) {
  Rational total = 0;
  for (const Rational& c : costs) total += c;
  Rational budget = total * fraction;
  return sgn(budget) > 0 ? budget : Rational(1);
}

void CheckCommon(int n, int cost_min, int cost_max) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (cost_min < 0 || cost_max < cost_min) {
    throw std::invalid_argument("bad cost range");
  }
}

}  // namespace

std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo,
                        std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Instance ErdosRenyiCut(int n, int edge_percent, int weight_max, int cost_min,
                       int cost_max, const Rational& budget_fraction,
                       std::mt19937_64& rng) {
  CheckCommon(n, cost_min, cost_max);
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (UniformInt(rng, 0, 99) < edge_percent) {
        edges.push_back({i, j, Rational(UniformInt(rng, 1, weight_max))});
      }
    }
  }
  std::vector<Rational> costs = RandomCosts(n, cost_min, cost_max, rng);
  Rational budget = BudgetFor(costs, budget_fraction);
  return Instance(std::move(costs), std::move(budget),
                  std::make_shared<CutValuation>(n, edges));
}

Instance RandomStarKnapsack(int n, int value_max, int cost_min, int cost_max,
                            const Rational& budget_fraction,
                            std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("a star needs at least 2 vertices");
  CheckCommon(n, cost_min, cost_max);
  std::vector<Rational> values;
  for (int i = 0; i + 1 < n; ++i) values.emplace_back(UniformInt(rng, 1, value_max));
  std::vector<Rational> costs = RandomCosts(n - 1, cost_min, cost_max, rng);
  const Rational budget = BudgetFor(costs, budget_fraction);
  return KnapsackToCut(values, costs, budget);
}

Instance RandomAdditive(int n, int value_max, int cost_min, int cost_max,
                        const Rational& budget_fraction, std::mt19937_64& rng) {
  CheckCommon(n, cost_min, cost_max);
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i) values.emplace_back(UniformInt(rng, 1, value_max));
  std::vector<Rational> costs = RandomCosts(n, cost_min, cost_max, rng);
  Rational budget = BudgetFor(costs, budget_fraction);
  return Instance(std::move(costs), std::move(budget),
                  std::make_shared<AdditiveValuation>(std::move(values)));
}

Instance RandomXos(int n, int clauses, int value_max, int cost_min,
                   int cost_max, const Rational& budget_fraction,
                   std::mt19937_64& rng) {
  CheckCommon(n, cost_min, cost_max);
  if (clauses < 1) throw std::invalid_argument("at least one clause");
  std::vector<std::vector<Rational>> table;
  for (int k = 0; k < clauses; ++k) {
    std::vector<Rational> clause;
    for (int i = 0; i < n; ++i) {
      clause.emplace_back(UniformInt(rng, 0, 2) == 0
                              ? 0
                              : UniformInt(rng, 1, value_max));
    }
    table.push_back(std::move(clause));
  }
  std::vector<Rational> costs = RandomCosts(n, cost_min, cost_max, rng);
  Rational budget = BudgetFor(costs, budget_fraction);
  return Instance(std::move(costs), std::move(budget),
                  std::make_shared<XosValuation>(n, std::move(table)));
}

Instance TabularSymmetric(int n, int edge_percent, int weight_max,
                          int cost_min, int cost_max,
                          const Rational& budget_fraction,
                          std::mt19937_64& rng) {
  CheckCommon(n, cost_min, cost_max);
  if (n > kMaxTabularAgents) {
    throw std::invalid_argument("tabular instances have at most 24 agents");
  }
  // Hyperedges of sizes 2 and 3.
  std::vector<std::pair<AgentSet, Rational>> hyperedges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (UniformInt(rng, 0, 99) < edge_percent) {
        hyperedges.push_back({AgentSet::Single(i).with(j),
                              Rational(UniformInt(rng, 1, weight_max))});
      }
      for (int k = j + 1; k < n; ++k) {
        if (UniformInt(rng, 0, 99) < edge_percent / 2) {
          hyperedges.push_back({AgentSet::Single(i).with(j).with(k),
                                Rational(UniformInt(rng, 1, weight_max))});
        }
      }
    }
  }
  std::vector<Rational> table(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    const AgentSet s(mask);
    for (const auto& [edge, weight] : hyperedges) {
      const AgentSet inside = edge & s;
      if (!inside.empty() && inside != edge) table[mask] += weight;
    }
  }
  std::vector<Rational> costs = RandomCosts(n, cost_min, cost_max, rng);
  Rational budget = BudgetFor(costs, budget_fraction);
  return Instance(std::move(costs), std::move(budget),
                  std::make_shared<TabularValuation>(n, std::move(table)));
}

Instance TabularCoverage(int n, int edge_percent, int weight_max,
                         int cost_min, int cost_max,
                         const Rational& budget_fraction,
                         std::mt19937_64& rng) {
  CheckCommon(n, cost_min, cost_max);
  if (n > kMaxTabularAgents) {
    throw std::invalid_argument("tabular instances have at most 24 agents");
  }
  const int elements = 2 * n;
  std::vector<Rational> weight;
  for (int e = 0; e < elements; ++e) {
    weight.emplace_back(UniformInt(rng, 1, weight_max));
  }
  std::vector<std::uint64_t> covers(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < elements; ++e) {
      if (UniformInt(rng, 0, 99) < edge_percent) {
        covers[static_cast<std::size_t>(i)] |= std::uint64_t{1} << e;
      }
    }
  }
  std::vector<Rational> table(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    std::uint64_t covered = 0;
    for (int i : AgentSet(mask)) covered |= covers[static_cast<std::size_t>(i)];
    for (int e = 0; e < elements; ++e) {
      if ((covered >> e) & 1) table[mask] += weight[static_cast<std::size_t>(e)];
    }
  }
  std::vector<Rational> costs = RandomCosts(n, cost_min, cost_max, rng);
  Rational budget = BudgetFor(costs, budget_fraction);
  return Instance(std::move(costs), std::move(budget),
                  std::make_shared<TabularValuation>(n, std::move(table)));
}

Instance Generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
  std::mt19937_64 rng(spec.seed);
  const std::string& f = spec.family;
  if (f == "erdos-renyi-cut") {
    return ErdosRenyiCut(spec.n, spec.edge_percent, spec.weight_max,
                         spec.cost_min, spec.cost_max, spec.budget_fraction, rng);
  }
  if (f == "star-knapsack") {
    if (!spec.item_values.empty()) {
      return KnapsackToCut(spec.item_values, spec.item_costs, spec.item_budget);
    }
    return RandomStarKnapsack(spec.n, spec.weight_max, spec.cost_min,
                              spec.cost_max, spec.budget_fraction, rng);
  }
  if (f == "random-additive") {
    return RandomAdditive(spec.n, spec.weight_max, spec.cost_min,
                          spec.cost_max, spec.budget_fraction, rng);
  }
  if (f == "random-xos") {
    return RandomXos(spec.n, spec.clauses, spec.weight_max, spec.cost_min,
                     spec.cost_max, spec.budget_fraction, rng);
  }
  if (f == "tabular-symmetric") {
    return TabularSymmetric(spec.n, spec.edge_percent, spec.weight_max,
                            spec.cost_min, spec.cost_max, spec.budget_fraction,
                            rng);
  }
  if (f == "tabular-coverage") {
    return TabularCoverage(spec.n, spec.edge_percent, spec.weight_max,
                           spec.cost_min, spec.cost_max, spec.budget_fraction,
                           rng);
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace bfm
