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

// Exhaustive optimization over subsets of a ground set.

#ifndef BFM_BRUTE_FORCE_H_
#define BFM_BRUTE_FORCE_H_

#include <optional>
#include <stdexcept>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

inline constexpr int kMaxBruteForceAgents = 24;

// Raised when an exhaustive subroutine is asked for more agents than it
// enumerates.
class DeskScaleOnly : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OptResult {
  Rational value;
  AgentSet set;
};

// max v(S) over S within `ground` with c(S) <= budget; no budget constraint
// when `budget` is empty. Ties go to the lexicographically smallest set.
// Throws DeskScaleOnly when |ground| exceeds 24.
OptResult BruteOpt(const Instance& inst, AgentSet ground,
                   const std::optional<Rational>& budget);

inline OptResult BruteOpt(const Instance& inst, AgentSet ground) {
  return BruteOpt(inst, ground, inst.budget());
}
inline OptResult BruteOpt(const Instance& inst) {
  return BruteOpt(inst, inst.agents(), inst.budget());
}

// argmax of v(S) - price * c(S) over S within `ground` (lexicographically
// smallest on ties).
OptResult BruteDemand(const Instance& inst, AgentSet ground,
                      const Rational& price);

// Most valuable agent of `ground` whose cost is at most the budget, lowest
// index on ties; -1 if there is none.
int BestAffordableSingleton(const Instance& inst, AgentSet ground);

}  // namespace bfm

#endif  // BFM_BRUTE_FORCE_H_
