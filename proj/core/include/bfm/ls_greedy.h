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

// Budgeted maximization of a symmetric submodular function: local search
// splits the agents in two sides, which are then solved separately with the
// enumerate-and-greedy procedure.

#ifndef BFM_LS_GREEDY_H_
#define BFM_LS_GREEDY_H_

#include <string>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

struct LsGreedyReport {
  AgentSet local_optimum;  // in the ids of the input instance
  AgentSet inside;         // solution found within the local optimum
  AgentSet outside;        // solution found within its complement
  Rational inside_value;
  Rational outside_value;
  std::string chosen;  // "inside" or "outside"
  Rational eps;
};

// Costs and budget multiplied by the common denominator of all of them. The
// procedures in this library are invariant under this scaling.
Instance ScaleToIntegral(const Instance& inst);

// A rational just below (e - 1) / (2e), minus eps: the fraction of opt that
// LsGreedy is guaranteed to reach.
Rational LsGreedyGuarantee(const Rational& eps);

// Runs on the cost-normalized, integrally scaled instance and reports the
// result in the agents of `inst`. The returned set is budget feasible.
AgentSet LsGreedy(const Instance& inst, const Rational& eps,
                  LsGreedyReport* report = nullptr);

}  // namespace bfm

#endif  // BFM_LS_GREEDY_H_
