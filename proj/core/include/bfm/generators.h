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

// Seeded random instance families. Generators draw from std::mt19937_64
// and reduce with modulo only, so outputs are identical on every platform.

#ifndef BFM_GENERATORS_H_
#define BFM_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

struct GeneratorSpec {
  // erdos-renyi-cut, star-knapsack, random-additive, random-xos,
  // tabular-symmetric, tabular-coverage.
  std::string family = "erdos-renyi-cut";
  int n = 6;
  std::uint64_t seed = 1;
  // Integer weights / values are drawn from [1, weight_max]; 1 gives
  // unweighted graphs.
  int weight_max = 1;
  // Integer costs are drawn from [cost_min, cost_max].
  int cost_min = 1;
  int cost_max = 10;
  // Edge or hyperedge probability in percent.
  int edge_percent = 50;
  // B = budget_fraction * total cost (1 if that is 0).
  Rational budget_fraction = Rational(1, 3);
  int clauses = 3;
  // star-knapsack: fixed items instead of random ones when non-empty.
  std::vector<Rational> item_values;
  std::vector<Rational> item_costs;
  Rational item_budget = 0;
};

// Throws std::invalid_argument for unknown families or n < 1.
Instance Generate(const GeneratorSpec& spec);

// Uniform integer in [lo, hi].
std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

Instance ErdosRenyiCut(int n, int edge_percent, int weight_max, int cost_min,
                       int cost_max, const Rational& budget_fraction,
                       std::mt19937_64& rng);
// Star of n - 1 random items around a hub of cost B + 1.
Instance RandomStarKnapsack(int n, int value_max, int cost_min, int cost_max,
                            const Rational& budget_fraction,
                            std::mt19937_64& rng);
Instance RandomAdditive(int n, int value_max, int cost_min, int cost_max,
                        const Rational& budget_fraction, std::mt19937_64& rng);
// Clause weights are 0 with probability 1/3, else uniform in [1, value_max].
Instance RandomXos(int n, int clauses, int value_max, int cost_min,
                   int cost_max, const Rational& budget_fraction,
                   std::mt19937_64& rng);
// Tabulated cut function of a random weighted hypergraph.
Instance TabularSymmetric(int n, int edge_percent, int weight_max,
                          int cost_min, int cost_max,
                          const Rational& budget_fraction,
                          std::mt19937_64& rng);

// Tabulated weighted coverage over 2n elements; each agent covers each
// element with probability edge_percent. Monotone submodular.
Instance TabularCoverage(int n, int edge_percent, int weight_max,
                         int cost_min, int cost_max,
                         const Rational& budget_fraction,
                         std::mt19937_64& rng);

}  // namespace bfm

#endif  // BFM_GENERATORS_H_
