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

#include "bfm/brute_force.h"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bfm {
namespace {

// Walks all subsets of `ground` keeping running cost sums.
template <typename Visit>
void ForEachSubsetWithCost(const Instance& inst, AgentSet ground,
                           Visit&& visit) {
  if (ground.size() > kMaxBruteForceAgents) {
    throw DeskScaleOnly("exhaustive search limited to 24 agents");
  }
  const std::vector<int> members = ground.ToVector();
  const std::uint64_t count = std::uint64_t{1} << members.size();
  thread_local std::vector<Rational> cost;
  thread_local std::vector<std::uint64_t> mask;
  if (cost.size() < count) cost.resize(count);
  if (mask.size() < count) mask.resize(count);
  cost[0] = 0;
  mask[0] = 0;
  if (!visit(AgentSet(), cost[0])) return;
  for (std::uint64_t rank = 1; rank < count; ++rank) {
    const int low = std::countr_zero(rank);
    const std::uint64_t prev = rank & (rank - 1);
    const int agent = members[static_cast<std::size_t>(low)];
    mask[rank] = mask[prev] | (std::uint64_t{1} << agent);
    cost[rank] = cost[prev] + inst.cost(agent);
    if (!visit(AgentSet(mask[rank]), cost[rank])) return;
  }
}

bool Better(const Rational& value, AgentSet set, const OptResult& best) {
  const int c = cmp(value, best.value);
  return c > 0 || (c == 0 && LexLess(set, best.set));
}

}  // namespace

OptResult BruteOpt(const Instance& inst, AgentSet ground,
                   const std::optional<Rational>& budget) {
  OptResult best{0, AgentSet()};
  best.value = inst.Value(AgentSet());
  ForEachSubsetWithCost(inst, ground, [&](AgentSet s, const Rational& cost) {
    if (s.empty()) return true;
    if (budget.has_value() && cost > *budget) return true;
    Rational value = inst.Value(s);
    if (Better(value, s, best)) {
      best.value = std::move(value);
      best.set = s;
    }
    return true;
  });
  return best;
}

OptResult BruteDemand(const Instance& inst, AgentSet ground,
                      const Rational& price) {
  OptResult best{inst.Value(AgentSet()), AgentSet()};
  ForEachSubsetWithCost(inst, ground, [&](AgentSet s, const Rational& cost) {
    if (s.empty()) return true;
    Rational utility = inst.Value(s) - price * cost;
    if (Better(utility, s, best)) {
      best.value = std::move(utility);
      best.set = s;
    }
    return true;
  });
  return best;
}

int BestAffordableSingleton(const Instance& inst, AgentSet ground) {
  int best = -1;
  Rational best_value;
  for (int i : ground) {
    if (inst.cost(i) > inst.budget()) continue;
    Rational value = inst.Value(AgentSet::Single(i));
    if (best < 0 || value > best_value) {
      best = i;
      best_value = std::move(value);
    }
  }
  return best;
}

}  // namespace bfm
