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

// Single-element add/remove local search and checks of the properties of
// its local optima.

#ifndef BFM_LOCAL_SEARCH_H_
#define BFM_LOCAL_SEARCH_H_

#include <cstdint>
#include <stdexcept>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

class IterationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalSearchOptions {
  // Applies to eps = 0 only.
  std::uint64_t move_cap = 1'000'000;
};

struct LocalSearchResult {
  AgentSet set;
  Rational eps;
  std::uint64_t iterations = 0;  // improving moves applied
  std::uint64_t oracle_queries = 0;
  bool exact = false;
};

// Starts from the most valuable singleton and applies improving moves until
// no agent a has max{v(S + a), v(S - a)} > (1 + eps/n^2) v(S). Scans agents
// from the lowest index after every move; adding is tried before removing.
LocalSearchResult ApproxLocalSearch(const Instance& inst, const Rational& eps,
                                    const LocalSearchOptions& options = {});

struct LocalOptimumCheck {
  bool holds = true;
  int agent = -1;         // violating agent
  bool add_move = false;  // whether adding (else removing) it improves
  // For symmetric valuations: whether the complement passes as well.
  bool complement_holds = true;
};

LocalOptimumCheck VerifyApproxLocalOpt(const Instance& inst, AgentSet s,
                                       const Rational& eps);

struct MonotonicityWitness {
  bool holds = true;
  AgentSet smaller;  // v(smaller) > v(larger)
  AgentSet larger;
};

// Confirms v(T) <= v(T + i) for all T within S, i in S \ T. Throws
// std::invalid_argument if S is not an exact local optimum and
// std::length_error for |S| > 20.
MonotonicityWitness VerifyRestrictedMonotone(const Instance& inst, AgentSet s);

struct QuasiMonotoneWitness {
  bool holds = true;
  AgentSet t;
  int agent = -1;
};

// Checks v(T + i) - v(T) >= -(eps/n) * opt_x for all proper T within X and
// i in X \ T, with n the number of agents of the instance.
QuasiMonotoneWitness VerifyQuasiMonotone(const Instance& inst, AgentSet x,
                                         const Rational& eps,
                                         const Rational& opt_x);

}  // namespace bfm

#endif  // BFM_LOCAL_SEARCH_H_
