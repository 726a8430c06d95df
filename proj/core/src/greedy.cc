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

#include "bfm/greedy.h"

#include <cstdint>

#include "bfm/breakpoints.h"

namespace bfm {
namespace {

struct Pick {
  int agent = -1;
  Density density;
  Rational value_with;  // v(S + agent)
};

// Densest agent of `remaining` against S, lowest index on ties.
Pick Densest(const Instance& inst, AgentSet s, const Rational& value_s,
             AgentSet remaining, std::vector<Rational>* marginals) {
  Pick best;
  for (int j : remaining) {
    Rational with = inst.Value(s.with(j));
    Rational marginal = with - value_s;
    Density d = Density::Of(marginal, inst.cost(j));
    if (marginals != nullptr) (*marginals)[static_cast<std::size_t>(j)] = marginal;
    if (best.agent < 0 || d > best.density) {
      best.agent = j;
      best.density = std::move(d);
      best.value_with = std::move(with);
    }
  }
  return best;
}

void NoteGreedyBreakpoints(BreakpointLog* log, const Instance& inst,
                           AgentSet remaining,
                           const std::vector<Rational>& marginals,
                           const Rational& value_s,
                           const Rational& budget_arg) {
  const int w = log->agent();
  if (!remaining.contains(w)) return;
  const Rational& mw = marginals[static_cast<std::size_t>(w)];
  if (sgn(mw) <= 0) return;
  for (int j : remaining) {
    if (j == w) continue;
    const Rational& mj = marginals[static_cast<std::size_t>(j)];
    if (sgn(mj) <= 0 || sgn(inst.cost(j)) <= 0) continue;
    log->Add(mw * inst.cost(j) / mj);
  }
  log->Add(budget_arg * mw / (value_s + mw));
}

}  // namespace

Density Density::Of(const Rational& marginal, const Rational& cost) {
  Density d;
  if (sgn(cost) == 0) {
    d.infinite = sgn(marginal);
    d.value = 0;
  } else {
    d.value = marginal / cost;
  }
  return d;
}

bool Density::operator>(const Density& other) const {
  if (infinite != other.infinite) return infinite > other.infinite;
  if (infinite != 0) return false;
  return value > other.value;
}

std::vector<int> ResortOrder(const Instance& inst, AgentSet ground) {
  std::vector<int> order;
  AgentSet prefix;
  Rational value_prefix = inst.Value(prefix);
  AgentSet remaining = ground;
  while (!remaining.empty()) {
    Pick pick = Densest(inst, prefix, value_prefix, remaining, nullptr);
    order.push_back(pick.agent);
    prefix = prefix.with(pick.agent);
    remaining = remaining.without(pick.agent);
    value_prefix = std::move(pick.value_with);
  }
  return order;
}

AgentSet GreedySm(const Instance& inst, AgentSet ground,
                  const Rational& budget_arg, GreedyTrace* trace) {
  BreakpointLog* log = BreakpointLog::Current();
  if (log != nullptr && !ground.contains(log->agent())) log = nullptr;
  std::vector<Rational> marginals(static_cast<std::size_t>(inst.n()));

  AgentSet s;
  Rational value_s = inst.Value(s);
  AgentSet remaining = ground;
  if (trace != nullptr) {
    *trace = GreedyTrace();
    trace->budget_arg = budget_arg;
  }
  while (!remaining.empty()) {
    Pick pick = Densest(inst, s, value_s, remaining, &marginals);
    if (log != nullptr) {
      NoteGreedyBreakpoints(log, inst, remaining, marginals, value_s,
                            budget_arg);
    }
    const int k = pick.agent;
    if (trace != nullptr) trace->order.push_back(k);
    const Rational marginal = pick.value_with - value_s;
    // c_k <= budget_arg * marginal / v(S + k), with v(S + k) > 0 here.
    const bool accept =
        sgn(marginal) > 0 &&
        inst.cost(k) * pick.value_with <= budget_arg * marginal;
    if (!accept) break;
    s = s.with(k);
    remaining = remaining.without(k);
    if (trace != nullptr) {
      trace->accepted.push_back({k, pick.density, marginal, pick.value_with});
    }
    value_s = std::move(pick.value_with);
  }
  if (trace != nullptr) trace->final_set = s;
  return s;
}

AgentSet GreedyEnumSm(const Instance& inst, AgentSet ground) {
  const Rational& budget = inst.budget();
  const std::vector<int> members = ground.ToVector();
  const std::size_t m = members.size();

  // Best feasible set with at most three agents.
  AgentSet small_best;
  Rational small_value = inst.Value(small_best);
  auto consider = [&](AgentSet s) {
    if (!inst.Feasible(s)) return;
    Rational value = inst.Value(s);
    const int c = cmp(value, small_value);
    if (c > 0 || (c == 0 && LexLess(s, small_best))) {
      small_best = s;
      small_value = std::move(value);
    }
  };
  for (std::size_t a = 0; a < m; ++a) {
    consider(AgentSet::Single(members[a]));
    for (std::size_t b = a + 1; b < m; ++b) {
      consider(AgentSet::Single(members[a]).with(members[b]));
      for (std::size_t c = b + 1; c < m; ++c) {
        consider(AgentSet::Single(members[a]).with(members[b]).with(members[c]));
      }
    }
  }

  AgentSet seeded_best;
  Rational seeded_value = inst.Value(seeded_best);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        AgentSet t =
            AgentSet::Single(members[a]).with(members[b]).with(members[c]);
        Rational cost = inst.CostOf(t);
        if (cost > budget) continue;
        Rational value_t = inst.Value(t);
        AgentSet remaining = ground - t;
        while (!remaining.empty()) {
          Pick pick = Densest(inst, t, value_t, remaining, nullptr);
          const int i = pick.agent;
          remaining = remaining.without(i);
          if (!pick.density.NonNegative()) continue;
          Rational next_cost = cost + inst.cost(i);
          if (next_cost > budget) continue;
          t = t.with(i);
          cost = std::move(next_cost);
          value_t = std::move(pick.value_with);
        }
        if (value_t > seeded_value) {
          seeded_best = t;
          seeded_value = std::move(value_t);
        }
      }
    }
  }
  return seeded_value > small_value ? seeded_best : small_best;
}

}  // namespace bfm
