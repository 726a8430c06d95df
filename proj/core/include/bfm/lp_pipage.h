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

// Linear relaxation of budgeted weighted max cut, an exact rational simplex
// for it, and pipage rounding of its solutions.
//
//   maximize    sum_{i<j} w_ij z_ij
//   subject to  z_ij <= x_i + x_j,  z_ij <= 2 - x_i - x_j,
//               sum_i c_i x_i <= B,  x_i = 0 outside the ground set,
//               0 <= x, z <= 1.

#ifndef BFM_LP_PIPAGE_H_
#define BFM_LP_PIPAGE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

class PivotCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CutLpModel {
  int n = 0;
  std::vector<Rational> weights;  // n * n, symmetric, zero diagonal
  std::vector<Rational> costs;
  Rational budget;
  AgentSet fixed_zero;

  const Rational& weight(int i, int j) const {
    return weights[static_cast<std::size_t>(i * n + j)];
  }
};

// Model for the sub-instance restricted to `ground`. Requires a cut
// valuation.
CutLpModel MakeCutLpModel(const Instance& inst, AgentSet ground);

struct LpSolution {
  std::vector<Rational> x;
  // z_ij for i < j in row-major pair order.
  std::vector<Rational> z;
  Rational objective;
  // Names of the basic variables at the optimum.
  std::vector<std::string> basis;
  int pivots = 0;
};

inline constexpr int kDefaultPivotCap = 100000;

// Bounded-variable primal simplex in exact arithmetic. Uses the largest
// reduced cost until the first degenerate pivot, then Bland's rule.
LpSolution SolveLp(const CutLpModel& model, int pivot_cap = kDefaultPivotCap);

// Optimal value of the relaxation over `ground`.
Rational OptF(const Instance& inst, AgentSet ground);

// Memoizes OptF by oracle, ground set and the costs inside it.
class OptFCache {
 public:
  Rational Value(const Instance& inst, AgentSet ground);
  std::size_t size() const { return cache_.size(); }

 private:
  std::unordered_map<std::string, Rational> cache_;
  // Keeps every oracle seen alive so that its address stays unique.
  std::unordered_map<const Valuation*, std::shared_ptr<const Valuation>> pins_;
};

// Plain-text rendering of the model, one constraint per line.
std::string DumpLp(const CutLpModel& model);

// sum_{i<j} w_ij min(x_i + x_j, 2 - x_i - x_j).
Rational LinearObjective(const CutLpModel& model,
                         const std::vector<Rational>& x);
// sum_{i<j} w_ij (x_i + x_j - 2 x_i x_j).
Rational QuadraticObjective(const CutLpModel& model,
                            const std::vector<Rational>& x);

struct PipageStep {
  int first = -1;
  int second = -1;  // -1 for a zero-cost coordinate set directly
  Rational shift;   // applied to `first`
  Rational value_after;
};

struct PipageResult {
  std::vector<Rational> x;
  Rational value;  // F(x)
  std::vector<PipageStep> trace;
  int fractional = -1;  // the remaining fractional coordinate, if any
};

// Moves pairs of fractional coordinates (lowest indices first) along the
// budget preserving direction to the better endpoint until at most one
// fractional coordinate remains.
PipageResult PipageRound(const CutLpModel& model, std::vector<Rational> x);

struct PipageBoundReport {
  Rational opt_f;
  Rational opt;
  Rational beta;   // max over affordable agents of v(i) / opt
  Rational ratio;  // opt_f / opt, 1 when both vanish
  bool relaxation_holds = false;   // opt <= opt_f
  bool beta_bound_holds = false;   // opt_f <= (2 + 2 beta) opt
  bool four_bound_holds = false;   // opt_f <= 4 opt
  bool rounding_monotone = false;  // F never decreases while rounding
  bool at_most_one_fractional = false;
  bool last_coordinate_bound = false;  // F(x') <= F(x0) + v(r)
};

// Solves the relaxation on the affordable agents, rounds it and checks the
// bounds against the exhaustive optimum.
PipageBoundReport VerifyPipageBound(const Instance& inst);

// A random point of the relaxation's x-polytope with small denominators.
std::vector<Rational> RandomFractionalPoint(const CutLpModel& model,
                                            std::mt19937_64& rng);

}  // namespace bfm

#endif  // BFM_LP_PIPAGE_H_
