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

// Budget-feasible procurement mechanisms. A mechanism is bound to one
// instance; its randomness is a finite list of leaves, each of which is a
// deterministic allocation rule of the bids. Payments are the threshold bids
// of the allocation rule of the leaf.

#ifndef BFM_MECHANISMS_H_
#define BFM_MECHANISMS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/frac_params.h"
#include "bfm/instance.h"
#include "bfm/lp_pipage.h"
#include "bfm/payments.h"
#include "bfm/rational.h"
#include "bfm/surd.h"

namespace bfm {

// opt_f(X, B) of some relaxation, evaluated on the instance it is given.
using OptFProvider = std::function<Rational(const Instance&, AgentSet)>;

// Exhaustive opt(X, B); a relaxation with rho = 1.
OptFProvider ExactOptProvider();
// The cut LP, memoized per provider.
OptFProvider CutLpProvider();

struct MechanismResult {
  AgentSet winners;
  std::vector<Rational> payments;  // one entry per agent, 0 for losers
  Rational value;
  std::string branch;
};

struct RandomLeaf {
  Rational probability;
  std::uint64_t code = 0;
  std::string label;
};

struct OutcomeBranch {
  Rational probability;
  std::string leaf;
  MechanismResult result;
};

struct RandomizedOutcome {
  std::vector<OutcomeBranch> branches;
  bool exact = true;
  std::uint64_t seed = 0;
};

struct MechanismOptions {
  Rational eps = Rational(1, 200);
  // Relaxation gap; defaults to 4 for cut valuations and 1 otherwise.
  std::optional<Rational> rho;
  // Budget fraction of mech-sm-frac-var.
  Rational gamma = 1;
  // Relaxation oracle; defaults to the cut LP for cut valuations and the
  // exhaustive optimum otherwise.
  OptFProvider opt_f;
};

class Mechanism {
 public:
  explicit Mechanism(const Instance& inst);
  virtual ~Mechanism() = default;
  Mechanism(const Mechanism&) = delete;
  Mechanism& operator=(const Mechanism&) = delete;

  virtual std::string_view id() const = 0;
  // Probabilities sum to 1. Deterministic mechanisms have a single leaf.
  virtual std::vector<RandomLeaf> Leaves() const;
  virtual AgentSet Allocate(const std::vector<Rational>& bids,
                            const RandomLeaf& leaf, std::string* branch) = 0;
  // The deliberately broken mechanism pays bids instead of thresholds.
  virtual bool pays_bids() const { return false; }

  const Instance& instance() const { return base_; }
  int n() const { return base_.n(); }

 protected:
  Instance WithBids(const std::vector<Rational>& bids) const {
    return base_.WithCosts(bids);
  }

  Instance base_;
};

// Threshold bid of `agent` under `leaf`, all other bids fixed.
Threshold ThresholdFor(Mechanism& mech, const std::vector<Rational>& bids,
                       const RandomLeaf& leaf, int agent,
                       const ThresholdOptions& options = {});

// Winners, branch tag and value; payments too when `with_payments`.
MechanismResult RunLeaf(Mechanism& mech, const std::vector<Rational>& bids,
                        const RandomLeaf& leaf, bool with_payments = true);

// Every leaf with its probability.
RandomizedOutcome RunExact(Mechanism& mech, const std::vector<Rational>& bids,
                           bool with_payments = true);
// One leaf drawn with a generator seeded by `seed`.
RandomizedOutcome RunSampled(Mechanism& mech,
                             const std::vector<Rational>& bids,
                             std::uint64_t seed, bool with_payments = true);

// Index of the leaf selected by a uniform 64-bit draw.
std::size_t PickLeaf(const std::vector<RandomLeaf>& leaves, std::uint64_t draw);

// Throws std::invalid_argument for unknown ids or valuation kinds the
// mechanism does not accept.
std::unique_ptr<Mechanism> MakeMechanism(std::string_view id,
                                         const Instance& inst,
                                         const MechanismOptions& options = {});

struct MechanismInfo {
  std::string id;
  bool randomized = false;
  // Proven approximation ratio, if any.
  std::optional<Surd> ratio_bound;
  std::string summary;
};

const std::vector<MechanismInfo>& MechanismCatalog();
const MechanismInfo& FindMechanismInfo(std::string_view id);

// Building blocks, usable on a sub-instance given by `ground`.

// i* paid B with probability 2/5 (singleton_branch), otherwise the greedy
// with budget B/2.
AgentSet RandMechSmLeaf(const Instance& inst, AgentSet ground,
                        bool singleton_branch, std::string* branch);
// i* if (2 + sqrt 6) v(i*) >= opt(ground - i*, B), else the greedy.
AgentSet MechSmAllocate(const Instance& inst, AgentSet ground,
                        std::string* branch);
// i* if inner_guard v(i*) >= opt_f(affordable ground - i*, B), else the
// greedy with budget `budget_arg`.
AgentSet MechSmFracAllocate(const Instance& inst, AgentSet ground,
                            const Surd& inner_guard, const OptFProvider& opt_f,
                            const Rational& budget_arg, std::string* branch);
// Additive values on `ground`: the best affordable agent when
// `singleton_branch`, otherwise the proportional-share greedy.
AgentSet AdditiveMechanismLeaf(const std::vector<Rational>& values,
                               const std::vector<Rational>& bids,
                               const Rational& budget, AgentSet ground,
                               bool singleton_branch, std::string* branch);
// Densest-first prefix in which every agent k satisfies
// c_k <= B v_k / v(prefix up to k).
AgentSet ProportionalShare(const std::vector<Rational>& values,
                           const std::vector<Rational>& bids,
                           const Rational& budget, AgentSet ground);

inline constexpr std::uint64_t kSingletonCoin = 1;

}  // namespace bfm

#endif  // BFM_MECHANISMS_H_
