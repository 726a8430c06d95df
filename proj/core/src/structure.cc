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

#include "bfm/structure.h"

#include <cstdint>
#include <iostream>
#include <memory>
#include <stdexcept>

namespace bfm {
namespace {

std::vector<Rational> ValueTable(const Instance& inst) {
  const std::size_t size = std::size_t{1} << inst.n();
  std::vector<Rational> table(size);
  for (std::size_t mask = 0; mask < size; ++mask) {
    table[mask] = inst.Value(AgentSet(mask));
  }
  return table;
}

void WarnLargeEnumeration(const char* what, int n) {
  if (n > 16) {
    std::cerr << "warning: " << what << " enumerates 2^" << n
              << " subsets; expect long running times\n";
  }
}

class Checker {
 public:
  explicit Checker(const Instance& inst)
      : n_(inst.n()), full_(AgentSet::Full(n_)), v_(ValueTable(inst)) {}

  const Rational& v(AgentSet s) const {
    return v_[static_cast<std::size_t>(s.bits())];
  }
  Rational marginal(AgentSet s, int i) const { return v(s.with(i)) - v(s); }

  // Diminishing returns over every nested pair.
  SubmodularityVerdict DefinitionExhaustive() const {
    SubmodularityVerdict out;
    for (std::uint64_t t = 0; t <= full_.bits(); ++t) {
      const AgentSet big(t);
      const AgentSet outside = full_ - big;
      for (std::uint64_t s = 0;; s = (s - t) & t) {
        const AgentSet small(s);
        for (int i : outside) {
          if (marginal(small, i) < marginal(big, i)) {
            return {false, small, big, i};
          }
        }
        if (s == t) break;
      }
    }
    return out;
  }

  // Diminishing returns for T = S + j only.
  SubmodularityVerdict DefinitionLocal() const {
    for (std::uint64_t s = 0; s <= full_.bits(); ++s) {
      const AgentSet small(s);
      const AgentSet outside = full_ - small;
      for (int j : outside) {
        const AgentSet big = small.with(j);
        for (int i : outside) {
          if (i == j) continue;
          if (marginal(small, i) < marginal(big, i)) return {false, small, big, i};
        }
      }
    }
    return {};
  }

  bool SumOfMarginalsHolds(AgentSet s, AgentSet t) const {
    Rational bound = v(s);
    for (int i : t - s) bound += marginal(s, i);
    const AgentSet both = s | t;
    for (int i : s - t) bound -= v(both) - v(both.without(i));
    return v(t) <= bound;
  }

  bool SumOfMarginalsAllPairs() const {
    for (std::uint64_t s = 0; s <= full_.bits(); ++s) {
      for (std::uint64_t t = 0; t <= full_.bits(); ++t) {
        if (!SumOfMarginalsHolds(AgentSet(s), AgentSet(t))) return false;
      }
    }
    return true;
  }

  bool SumOfMarginalsNested() const {
    for (std::uint64_t t = 0; t <= full_.bits(); ++t) {
      for (std::uint64_t s = 0;; s = (s - t) & t) {
        if (!SumOfMarginalsHolds(AgentSet(s), AgentSet(t))) return false;
        if (s == t) break;
      }
    }
    return true;
  }

  bool SumOfMarginalsLocal() const {
    for (std::uint64_t s = 0; s <= full_.bits(); ++s) {
      const AgentSet small(s);
      const AgentSet outside = full_ - small;
      for (int i : outside) {
        for (int j : outside) {
          if (j <= i) continue;
          if (!SumOfMarginalsHolds(small, small.with(i).with(j))) return false;
        }
      }
    }
    return true;
  }

  int n() const { return n_; }
  AgentSet full() const { return full_; }

 private:
  int n_;
  AgentSet full_;
  std::vector<Rational> v_;
};

}  // namespace

SubmodularityVerdict CheckSubmodular(const Instance& inst) {
  if (inst.n() > kMaxTabularAgents) {
    throw std::length_error("submodularity check limited to 24 agents");
  }
  WarnLargeEnumeration("CheckSubmodular", inst.n());
  const Checker checker(inst);
  SubmodularityVerdict verdict;
  bool second;
  if (inst.n() <= 12) {
    verdict = checker.DefinitionExhaustive();
    second = inst.n() <= 8 ? checker.SumOfMarginalsAllPairs()
                           : checker.SumOfMarginalsNested();
  } else {
    verdict = checker.DefinitionLocal();
    second = checker.SumOfMarginalsLocal();
  }
  if (verdict.holds != second) {
    throw std::logic_error(
        "submodularity criteria disagree; the value oracle is inconsistent");
  }
  return verdict;
}

SymmetryVerdict CheckSymmetric(const Instance& inst) {
  if (inst.n() > kMaxTabularAgents) {
    throw std::length_error("symmetry check limited to 24 agents");
  }
  WarnLargeEnumeration("CheckSymmetric", inst.n());
  const Checker checker(inst);
  const AgentSet full = checker.full();
  for (std::uint64_t s = 1; s < full.bits(); ++s) {
    const AgentSet set(s);
    if (checker.v(set) != checker.v(full - set)) return {false, set};
  }
  if (checker.v(AgentSet()) != checker.v(full)) return {false, AgentSet()};
  return {};
}

Instance NormalizeCosts(const Instance& inst) {
  AgentSet expensive;
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.cost(i) > inst.budget()) expensive = expensive.with(i);
  }
  if (expensive.size() < 2) return inst;

  const std::vector<int> kept = (inst.agents() - expensive).ToVector();
  const int merged = static_cast<int>(kept.size());
  const int m = merged + 1;
  // Maps an agent set of the new instance to the old one.
  auto expand = [&](AgentSet t) {
    AgentSet out;
    for (int k : t) {
      out = out | (k == merged ? expensive
                               : AgentSet::Single(kept[static_cast<std::size_t>(k)]));
    }
    return out;
  };

  std::vector<Rational> costs;
  std::vector<AgentSet> origin;
  for (int i : kept) {
    costs.push_back(inst.cost(i));
    origin.push_back(inst.origin()[static_cast<std::size_t>(i)]);
  }
  costs.push_back(inst.budget() + 1);
  origin.push_back(inst.ToOrigin(expensive));

  const Valuation& base = inst.valuation().Underlying();
  std::shared_ptr<const Valuation> valuation;
  if (const CutValuation* cut = AsCut(base)) {
    std::vector<WeightedEdge> edges;
    for (int a = 0; a < merged; ++a) {
      const int i = kept[static_cast<std::size_t>(a)];
      for (int b = a + 1; b < merged; ++b) {
        const int j = kept[static_cast<std::size_t>(b)];
        edges.push_back({a, b, cut->weight(i, j)});
      }
      Rational to_merged = 0;
      for (int e : expensive) to_merged += cut->weight(i, e);
      edges.push_back({a, merged, to_merged});
    }
    valuation = std::make_shared<CutValuation>(m, edges);
  } else if (const AdditiveValuation* add = AsAdditive(base)) {
    std::vector<Rational> values;
    for (int i : kept) values.push_back(add->values()[static_cast<std::size_t>(i)]);
    Rational sum = 0;
    for (int e : expensive) sum += add->values()[static_cast<std::size_t>(e)];
    values.push_back(sum);
    valuation = std::make_shared<AdditiveValuation>(std::move(values));
  } else if (const XosValuation* xos = AsXos(base)) {
    std::vector<std::vector<Rational>> clauses;
    for (const auto& clause : xos->clauses()) {
      std::vector<Rational> merged_clause;
      for (int i : kept) merged_clause.push_back(clause[static_cast<std::size_t>(i)]);
      Rational sum = 0;
      for (int e : expensive) sum += clause[static_cast<std::size_t>(e)];
      merged_clause.push_back(sum);
      clauses.push_back(std::move(merged_clause));
    }
    valuation = std::make_shared<XosValuation>(m, std::move(clauses));
  } else {
    std::vector<Rational> table(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      table[mask] = base.Value(expand(AgentSet(mask)));
    }
    valuation = std::make_shared<TabularValuation>(m, std::move(table));
  }
  return Instance(std::move(costs), inst.budget(), std::move(valuation),
                  std::move(origin));
}

int MergedAgent(const Instance& normalized) {
  for (int i = 0; i < normalized.n(); ++i) {
    if (normalized.origin()[static_cast<std::size_t>(i)].size() > 1) return i;
  }
  return -1;
}

AgentSet LiftFromNormalized(const Instance& original, AgentSet s) {
  AgentSet expensive;
  for (int i = 0; i < original.n(); ++i) {
    if (original.cost(i) > original.budget()) expensive = expensive.with(i);
  }
  if (expensive.size() < 2) return s;
  const std::vector<int> kept = (original.agents() - expensive).ToVector();
  AgentSet out;
  for (int k : s) {
    out = out | (k == static_cast<int>(kept.size())
                     ? expensive
                     : AgentSet::Single(kept[static_cast<std::size_t>(k)]));
  }
  return out;
}

Instance KnapsackToCut(const std::vector<Rational>& values,
                       const std::vector<Rational>& costs,
                       const Rational& budget) {
  if (values.size() != costs.size()) {
    throw std::invalid_argument("values and costs differ in length");
  }
  const int items = static_cast<int>(values.size());
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < items; ++i) {
    if (sgn(values[static_cast<std::size_t>(i)]) < 0) {
      throw std::invalid_argument("negative knapsack value");
    }
    edges.push_back({i, items, values[static_cast<std::size_t>(i)]});
  }
  std::vector<Rational> star_costs = costs;
  star_costs.push_back(budget + 1);
  return Instance(std::move(star_costs), budget,
                  std::make_shared<CutValuation>(items + 1, edges));
}

}  // namespace bfm
