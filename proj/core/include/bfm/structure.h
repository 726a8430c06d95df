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

// Structural checks on valuations and instance transformations.

#ifndef BFM_STRUCTURE_H_
#define BFM_STRUCTURE_H_

#include <vector>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

struct SubmodularityVerdict {
  bool holds = true;
  // Witness of v(S + i) - v(S) < v(T + i) - v(T) with S subset of T, i not
  // in T. Only meaningful when !holds.
  AgentSet s;
  AgentSet t;
  int agent = -1;
};

// Checks diminishing returns directly and, independently, through the
// equivalent sum-of-marginals inequality
//   v(T) <= v(S) + sum_{i in T\S} (v(S+i) - v(S))
//                - sum_{i in S\T} (v(S u T) - v(S u T - i)).
// Up to 12 agents both criteria are enumerated over all nested pairs (all
// pairs for the second one up to 8 agents); above that both use the
// equivalent one- and two-element extensions. Throws std::logic_error if the
// two criteria disagree and std::length_error above 24 agents.
SubmodularityVerdict CheckSubmodular(const Instance& inst);

struct SymmetryVerdict {
  bool holds = true;
  AgentSet witness;  // v(witness) != v(A \ witness)
};

// Nonempty proper subsets are scanned in increasing bitmask order first, the
// empty set last.
SymmetryVerdict CheckSymmetric(const Instance& inst);

// Merges all agents with cost above the budget into one agent of cost B + 1
// when there are at least two of them. The merged agent comes last and its
// origin() entry lists the merged agents. The valuation keeps its kind.
Instance NormalizeCosts(const Instance& inst);

// Index of the merged agent, or -1 if `normalized` has none.
int MergedAgent(const Instance& normalized);

// Maps a set of agents of NormalizeCosts(original) back to agents of
// `original`; the merged agent expands to all agents it replaced.
AgentSet LiftFromNormalized(const Instance& original, AgentSet s);

// Star graph on n + 1 vertices: edge (i, hub) weighs values[i], the hub costs
// B + 1. Budgeted cut optima equal knapsack optima.
Instance KnapsackToCut(const std::vector<Rational>& values,
                       const std::vector<Rational>& costs,
                       const Rational& budget);

}  // namespace bfm

#endif  // BFM_STRUCTURE_H_
