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

#include "bfm/local_search.h"

#include <string>

namespace bfm {
namespace {

Rational Factor(const Instance& inst, const Rational& eps) {
  const Rational n = inst.n();
  return 1 + eps / (n * n);
}

LocalOptimumCheck CheckOne(const Instance& inst, AgentSet s,
                           const Rational& factor) {
  const Rational threshold = factor * inst.Value(s);
  for (int i = 0; i < inst.n(); ++i) {
    const bool add = !s.contains(i);
    const Rational moved = inst.Value(add ? s.with(i) : s.without(i));
    if (moved > threshold) {
      LocalOptimumCheck out;
      out.holds = false;
      out.agent = i;
      out.add_move = add;
      return out;
    }
  }
  return {};
}

}  // namespace

LocalSearchResult ApproxLocalSearch(const Instance& inst, const Rational& eps,
                                    const LocalSearchOptions& options) {
  if (sgn(eps) < 0) throw std::invalid_argument("eps must be >= 0");
  const int n = inst.n();
  const Rational factor = Factor(inst, eps);
  LocalSearchResult result;
  result.eps = eps;
  result.exact = sgn(eps) == 0;

  auto query = [&](AgentSet s) {
    ++result.oracle_queries;
    return inst.Value(s);
  };

  int start = 0;
  Rational current = query(AgentSet::Single(0));
  for (int i = 1; i < n; ++i) {
    Rational value = query(AgentSet::Single(i));
    if (value > current) {
      current = std::move(value);
      start = i;
    }
  }
  AgentSet s = AgentSet::Single(start);

  for (;;) {
    const Rational threshold = factor * current;
    bool moved = false;
    for (int a = 0; a < n; ++a) {
      const AgentSet next = s.contains(a) ? s.without(a) : s.with(a);
      Rational value = query(next);
      if (value > threshold) {
        s = next;
        current = std::move(value);
        moved = true;
        break;
      }
    }
    if (!moved) break;
    ++result.iterations;
    if (result.exact && result.iterations >= options.move_cap) {
      throw IterationCapExceeded("exact local search exceeded " +
                                 std::to_string(options.move_cap) + " moves");
    }
  }
  result.set = s;
  return result;
}

LocalOptimumCheck VerifyApproxLocalOpt(const Instance& inst, AgentSet s,
                                       const Rational& eps) {
  const Rational factor = Factor(inst, eps);
  LocalOptimumCheck out = CheckOne(inst, s, factor);
  if (AsCut(inst.valuation()) != nullptr) {
    out.complement_holds = CheckOne(inst, inst.agents() - s, factor).holds;
  } else {
    out.complement_holds = out.holds;
  }
  return out;
}

MonotonicityWitness VerifyRestrictedMonotone(const Instance& inst,
                                             AgentSet s) {
  if (s.size() > 20) {
    throw std::length_error("restricted monotonicity check limited to 20");
  }
  if (!VerifyApproxLocalOpt(inst, s, 0).holds) {
    throw std::invalid_argument(s.ToString() +
                                " is not an exact local optimum");
  }
  const std::uint64_t full = s.bits();
  for (std::uint64_t t = 0;; t = (t - full) & full) {
    const AgentSet small(t);
    const Rational base = inst.Value(small);
    for (int i : s - small) {
      if (inst.Value(small.with(i)) < base) return {false, small, small.with(i)};
    }
    if (t == full) break;
  }
  return {};
}

QuasiMonotoneWitness VerifyQuasiMonotone(const Instance& inst, AgentSet x,
                                         const Rational& eps,
                                         const Rational& opt_x) {
  if (x.size() > 20) {
    throw std::length_error("quasi-monotonicity check limited to 20");
  }
  const Rational floor = -(eps / inst.n()) * opt_x;
  // Largest proper subsets first.
  const std::uint64_t full = x.bits();
  if (full == 0) return {};
  for (std::uint64_t t = (full - 1) & full;; t = (t - 1) & full) {
    const AgentSet small(t);
    const Rational base = inst.Value(small);
    for (int i : x - small) {
      if (inst.Value(small.with(i)) - base < floor) return {false, small, i};
    }
    if (t == 0) break;
  }
  return {};
}

}  // namespace bfm
