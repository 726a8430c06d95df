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

#include "bfm/mechanisms.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "bfm/breakpoints.h"
#include "bfm/brute_force.h"
#include "bfm/greedy.h"
#include "bfm/local_search.h"
#include "bfm/structure.h"
#include "bfm/valuation.h"

namespace bfm {
namespace {

void Tag(std::string* branch, std::string_view text) {
  if (branch != nullptr) *branch = std::string(text);
}

Rational SingletonValue(const Instance& inst, int i) {
  return inst.Value(AgentSet::Single(i));
}

const Surd& SqrtSixPlusTwo() {
  static const Surd factor{2, 1, 6};
  return factor;
}

std::vector<RandomLeaf> CoinLeaves(const Rational& singleton_probability) {
  return {{singleton_probability, kSingletonCoin, "singleton"},
          {1 - singleton_probability, 0, "greedy"}};
}

bool SingletonCoin(const RandomLeaf& leaf) {
  return (leaf.code & kSingletonCoin) != 0;
}

// Side of an exact local optimum with the larger optimum (the local optimum
// itself on ties).
AgentSet BetterSide(const Instance& inst, AgentSet local, const char** name) {
  const AgentSet other = inst.agents() - local;
  if (BruteOpt(inst, local).value >= BruteOpt(inst, other).value) {
    *name = "S";
    return local;
  }
  *name = "A\\S";
  return other;
}

OptFProvider DefaultOptF(const Instance& inst, const MechanismOptions& opts) {
  if (opts.opt_f) return opts.opt_f;
  if (AsCut(inst.valuation()) != nullptr) return CutLpProvider();
  return ExactOptProvider();
}

Rational DefaultRho(const Instance& inst, const MechanismOptions& opts) {
  if (opts.rho.has_value()) return *opts.rho;
  return AsCut(inst.valuation()) != nullptr ? Rational(4) : Rational(1);
}

class GreedySmMechanism final : public Mechanism {
 public:
  GreedySmMechanism(const Instance& inst, bool pays_bids)
      : Mechanism(inst), pays_bids_(pays_bids) {}
  std::string_view id() const override {
    return pays_bids_ ? "canary-pay-bid" : "greedy-sm";
  }
  bool pays_bids() const override { return pays_bids_; }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf&,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    Tag(branch, "greedy");
    return GreedySm(inst, inst.agents(), inst.budget() / 2);
  }

 private:
  bool pays_bids_;
};

class RandMechSm final : public Mechanism {
 public:
  using Mechanism::Mechanism;
  std::string_view id() const override { return "rand-mech-sm"; }
  std::vector<RandomLeaf> Leaves() const override {
    return CoinLeaves(Rational(2, 5));
  }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf& leaf,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    return RandMechSmLeaf(inst, inst.agents(), SingletonCoin(leaf), branch);
  }
};

class MechSm final : public Mechanism {
 public:
  using Mechanism::Mechanism;
  std::string_view id() const override { return "mech-sm"; }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf&,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    return MechSmAllocate(inst, inst.agents(), branch);
  }
};

class MechSmFrac final : public Mechanism {
 public:
  MechSmFrac(const Instance& inst, const MechanismOptions& opts, bool var)
      : Mechanism(inst),
        var_(var),
        eta_(GuardFactor(DefaultRho(inst, opts))),
        gamma_(var ? opts.gamma : Rational(1)),
        opt_f_(DefaultOptF(inst, opts)) {}
  std::string_view id() const override {
    return var_ ? "mech-sm-frac-var" : "mech-sm-frac";
  }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf&,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    return MechSmFracAllocate(inst, inst.agents(), eta_, opt_f_,
                              gamma_ * inst.budget() / 2, branch);
  }

 private:
  bool var_;
  Surd eta_;
  Rational gamma_;
  OptFProvider opt_f_;
};

class SymSmMechanism : public Mechanism {
 public:
  using Mechanism::Mechanism;

 protected:
  // Exact local optimum of v; it does not depend on the bids.
  AgentSet LocalOptimum() {
    if (!local_.has_value()) local_ = ApproxLocalSearch(base_, 0).set;
    return *local_;
  }

 private:
  std::optional<AgentSet> local_;
};

class RandMechSymSm final : public SymSmMechanism {
 public:
  using SymSmMechanism::SymSmMechanism;
  std::string_view id() const override { return "rand-mech-symsm"; }
  std::vector<RandomLeaf> Leaves() const override {
    return CoinLeaves(Rational(2, 5));
  }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf& leaf,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    const char* side_name = "";
    const AgentSet side = BetterSide(inst, LocalOptimum(), &side_name);
    std::string inner;
    const AgentSet out = RandMechSmLeaf(inst, side, SingletonCoin(leaf), &inner);
    Tag(branch, std::string(side_name) + ": " + inner);
    return out;
  }
};

class DetMechSymSm final : public SymSmMechanism {
 public:
  using SymSmMechanism::SymSmMechanism;
  std::string_view id() const override { return "det-mech-symsm"; }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf&,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    const char* side_name = "";
    const AgentSet side = BetterSide(inst, LocalOptimum(), &side_name);
    std::string inner;
    const AgentSet out = MechSmAllocate(inst, side, &inner);
    Tag(branch, std::string(side_name) + ": " + inner);
    return out;
  }
};

class RandMechUCut final : public SymSmMechanism {
 public:
  using SymSmMechanism::SymSmMechanism;
  std::string_view id() const override { return "rand-mech-ucut"; }
  std::vector<RandomLeaf> Leaves() const override {
    return {{Rational(1, 5), kSingletonCoin, "S, singleton"},
            {Rational(3, 10), 0, "S, greedy"},
            {Rational(1, 5), 2 | kSingletonCoin, "A\\S, singleton"},
            {Rational(3, 10), 2, "A\\S, greedy"}};
  }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf& leaf,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    const bool complement = (leaf.code & 2) != 0;
    const AgentSet local = LocalOptimum();
    const AgentSet side = complement ? inst.agents() - local : local;
    std::string inner;
    const AgentSet out = RandMechSmLeaf(inst, side, SingletonCoin(leaf), &inner);
    Tag(branch, std::string(complement ? "A\\S: " : "S: ") + inner);
    return out;
  }
};

// Shared shape of the mechanisms that guard i* against a relaxation, split
// along a local optimum and run the fractional mechanism on one side.
AgentSet GuardedSplit(const Instance& inst, const Surd& single_item_factor,
                      AgentSet local, const Surd& inner_guard,
                      const Rational& budget_arg, const OptFProvider& opt_f,
                      std::string* branch) {
  const AgentSet affordable = inst.Affordable();
  const int best = BestAffordableSingleton(inst, inst.agents());
  if (best < 0) {
    Tag(branch, "no affordable agent");
    return {};
  }
  if (SurdTimesAtLeast(single_item_factor, SingletonValue(inst, best),
                       opt_f(inst, affordable.without(best)))) {
    Tag(branch, "returned i*");
    return AgentSet::Single(best);
  }
  const AgentSet other = inst.agents() - local;
  const bool keep = opt_f(inst, local & affordable) >= opt_f(inst, other & affordable);
  const AgentSet side = keep ? local : other;
  std::string inner;
  const AgentSet out =
      MechSmFracAllocate(inst, side, inner_guard, opt_f, budget_arg, &inner);
  Tag(branch, std::string(keep ? "S: " : "A\\S: ") + inner);
  return out;
}

class DetMechUCut final : public SymSmMechanism {
 public:
  DetMechUCut(const Instance& inst, const MechanismOptions& opts)
      : SymSmMechanism(inst),
        eta_(GuardFactor(2 + 8 / kGuard)),
        opt_f_(DefaultOptF(inst, opts)) {}
  std::string_view id() const override { return "det-mech-ucut"; }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf&,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    return GuardedSplit(inst, Surd::FromRational(kGuard), LocalOptimum(), eta_,
                        inst.budget() / 2, opt_f_, branch);
  }

 private:
  inline static const Rational kGuard = Rational(105, 4);
  Surd eta_;
  OptFProvider opt_f_;
};

// Runs on the cost-normalized instance; local optima are cached per set of
// merged agents.
class DetMechSymSmFrac final : public Mechanism {
 public:
  DetMechSymSmFrac(const Instance& inst, const MechanismOptions& opts,
                   bool tuned)
      : Mechanism(inst),
        tuned_(tuned),
        params_(tuned ? MakeTunedCutParams(Rational(26245, 1000), opts.eps)
                      : MakeFracParams(DefaultRho(inst, opts), opts.eps)),
        opt_f_(DefaultOptF(inst, opts)) {
    if (tuned && AsCut(inst.valuation()) == nullptr) {
      throw std::invalid_argument("the tuned variant needs a cut valuation");
    }
  }
  std::string_view id() const override {
    return tuned_ ? "det-mech-symsm-frac-tuned" : "det-mech-symsm-frac";
  }
  const FracMechanismParams& params() const { return params_; }

  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf&,
                    std::string* branch) override {
    AgentSet expensive;
    for (int i = 0; i < n(); ++i) {
      if (bids[static_cast<std::size_t>(i)] > base_.budget()) {
        expensive = expensive.with(i);
      }
    }
    if (expensive.size() < 2) {
      return Run(WithBids(bids), expensive, branch);
    }
    const Normalized& norm = NormalizedFor(expensive);
    std::vector<Rational> costs;
    std::vector<int> new_index(static_cast<std::size_t>(n()), -1);
    for (int i : base_.agents() - expensive) {
      new_index[static_cast<std::size_t>(i)] = static_cast<int>(costs.size());
      costs.push_back(bids[static_cast<std::size_t>(i)]);
    }
    costs.push_back(base_.budget() + 1);
    const Instance inst(std::move(costs), base_.budget(), norm.valuation,
                        norm.origin);
    AgentSet won;
    BreakpointLog* outer = BreakpointLog::Current();
    const int watched =
        outer == nullptr ? -1 : new_index[static_cast<std::size_t>(outer->agent())];
    if (watched >= 0) {
      BreakpointLog inner(watched);
      won = Run(inst, expensive, branch);
      for (const Rational& point : inner.points()) outer->Add(point);
    } else {
      won = Run(inst, expensive, branch);
    }
    return inst.ToOrigin(won);
  }

 private:
  struct Normalized {
    std::shared_ptr<const Valuation> valuation;
    std::vector<AgentSet> origin;
    std::optional<AgentSet> local;
  };

  const Normalized& NormalizedFor(AgentSet expensive) {
    auto it = normalized_.find(expensive.bits());
    if (it != normalized_.end()) return it->second;
    std::vector<Rational> costs = base_.costs();
    for (int i = 0; i < n(); ++i) {
      costs[static_cast<std::size_t>(i)] =
          expensive.contains(i) ? base_.budget() + 1 : Rational(0);
    }
    const Instance merged = NormalizeCosts(base_.WithCosts(costs)).Memoized();
    Normalized entry{merged.valuation_ptr(), merged.origin(), std::nullopt};
    return normalized_.emplace(expensive.bits(), std::move(entry)).first->second;
  }

  AgentSet LocalFor(const Instance& inst, AgentSet expensive) {
    std::optional<AgentSet>* slot;
    if (expensive.size() < 2) {
      slot = &plain_local_;
    } else {
      slot = &normalized_.find(expensive.bits())->second.local;
    }
    if (!slot->has_value()) {
      *slot = ApproxLocalSearch(inst, params_.search_eps).set;
    }
    return **slot;
  }

  AgentSet Run(const Instance& inst, AgentSet expensive, std::string* branch) {
    return GuardedSplit(inst, params_.outer_guard, LocalFor(inst, expensive),
                        params_.inner_guard, params_.gamma * inst.budget() / 2,
                        opt_f_, branch);
  }

  bool tuned_;
  FracMechanismParams params_;
  OptFProvider opt_f_;
  std::optional<AgentSet> plain_local_;
  std::unordered_map<std::uint64_t, Normalized> normalized_;
};

std::vector<Rational> AdditiveValues(const Instance& inst) {
  const Valuation& base = inst.valuation().Underlying();
  if (const AdditiveValuation* add = AsAdditive(base)) return add->values();
  if (const XosValuation* xos = AsXos(base)) {
    if (xos->clauses().size() == 1) return xos->clauses().front();
  }
  throw std::invalid_argument("additive-mechanism needs an additive valuation");
}

class AdditiveMechanism final : public Mechanism {
 public:
  explicit AdditiveMechanism(const Instance& inst)
      : Mechanism(inst), values_(AdditiveValues(inst)) {}
  std::string_view id() const override { return "additive-mechanism"; }
  std::vector<RandomLeaf> Leaves() const override {
    return CoinLeaves(Rational(1, 3));
  }
  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf& leaf,
                    std::string* branch) override {
    return AdditiveMechanismLeaf(values_, bids, base_.budget(), base_.agents(),
                                 SingletonCoin(leaf), branch);
  }

 private:
  std::vector<Rational> values_;
};

class MainXos final : public Mechanism {
 public:
  explicit MainXos(const Instance& inst) : Mechanism(inst) {
    const Valuation& base = inst.valuation().Underlying();
    if (const XosValuation* xos = AsXos(base)) {
      clauses_ = xos->clauses();
    } else if (const AdditiveValuation* add = AsAdditive(base)) {
      clauses_ = {add->values()};
    } else {
      throw std::invalid_argument("main-xos needs an xos or additive valuation");
    }
    if (inst.n() > 20) {
      throw DeskScaleOnly("main-xos enumerates samples; at most 20 agents");
    }
  }
  std::string_view id() const override { return "main-xos"; }

  std::vector<RandomLeaf> Leaves() const override {
    std::vector<RandomLeaf> leaves;
    leaves.push_back({kSingletonProbability, 0, "best item"});
    const Rational per_sample =
        (1 - kSingletonProbability) * InversePowerOfTwo(n());
    const std::uint64_t samples = std::uint64_t{1} << n();
    for (std::uint64_t t = 0; t < samples; ++t) {
      const std::string name = "T=" + AgentSet(t).ToString();
      leaves.push_back({per_sample * Rational(1, 3), 1 + (t << 1 | kSingletonCoin),
                        name + ", singleton"});
      leaves.push_back({per_sample * Rational(2, 3), 1 + (t << 1),
                        name + ", proportional share"});
    }
    return leaves;
  }

  AgentSet Allocate(const std::vector<Rational>& bids, const RandomLeaf& leaf,
                    std::string* branch) override {
    const Instance inst = WithBids(bids);
    if (leaf.code == 0) {
      const int best = BestAffordableSingleton(inst, inst.agents());
      Tag(branch, "best item");
      return best < 0 ? AgentSet() : AgentSet::Single(best);
    }
    const std::uint64_t code = leaf.code - 1;
    const AgentSet sample(code >> 1);
    const bool singleton = (code & kSingletonCoin) != 0;
    const Rational opt_sample = BruteOpt(inst, sample).value;
    const Rational price = opt_sample / (Rational(23, 5) * inst.budget());
    const AgentSet demand =
        BruteDemand(inst, inst.agents() - sample, price).set;
    std::size_t clause = 0;
    if (clauses_.size() > 1) {
      clause = AsXos(inst.valuation().Underlying())->BestClause(demand);
    }
    std::string inner;
    const AgentSet out = AdditiveMechanismLeaf(
        clauses_[clause], bids, inst.budget(), demand, singleton, &inner);
    Tag(branch, "sample: S*=" + demand.ToString() + ", " + inner);
    return out;
  }

 private:
  inline static const Rational kSingletonProbability = Rational(2, 25);
  std::vector<std::vector<Rational>> clauses_;
};

}  // namespace

OptFProvider ExactOptProvider() {
  return [](const Instance& inst, AgentSet ground) {
    return BruteOpt(inst, ground).value;
  };
}

OptFProvider CutLpProvider() {
  auto cache = std::make_shared<OptFCache>();
  return [cache](const Instance& inst, AgentSet ground) {
    return cache->Value(inst, ground);
  };
}

Mechanism::Mechanism(const Instance& inst) : base_(inst.Memoized()) {}

std::vector<RandomLeaf> Mechanism::Leaves() const {
  return {{Rational(1), 0, "deterministic"}};
}

Threshold ThresholdFor(Mechanism& mech, const std::vector<Rational>& bids,
                       const RandomLeaf& leaf, int agent,
                       const ThresholdOptions& options) {
  std::vector<Rational> probe_bids = bids;
  auto wins = [&](const Rational& bid) {
    probe_bids[static_cast<std::size_t>(agent)] = bid;
    return mech.Allocate(probe_bids, leaf, nullptr).contains(agent);
  };
  const Rational& own = bids[static_cast<std::size_t>(agent)];
  const bool wins_now = wins(own);
  return FindThreshold(agent, wins, mech.instance().budget(),
                       wins_now ? &own : nullptr, options);
}

MechanismResult RunLeaf(Mechanism& mech, const std::vector<Rational>& bids,
                        const RandomLeaf& leaf, bool with_payments) {
  if (static_cast<int>(bids.size()) != mech.n()) {
    throw std::invalid_argument("one bid per agent expected");
  }
  MechanismResult out;
  out.winners = mech.Allocate(bids, leaf, &out.branch);
  out.value = mech.instance().Value(out.winners);
  out.payments.assign(static_cast<std::size_t>(mech.n()), Rational(0));
  if (!with_payments) return out;
  for (int i : out.winners) {
    const Rational& bid = bids[static_cast<std::size_t>(i)];
    if (mech.pays_bids()) {
      out.payments[static_cast<std::size_t>(i)] = bid;
      continue;
    }
    const Threshold threshold = ThresholdFor(mech, bids, leaf, i);
    out.payments[static_cast<std::size_t>(i)] = std::max(threshold.value, bid);
  }
  return out;
}

RandomizedOutcome RunExact(Mechanism& mech, const std::vector<Rational>& bids,
                           bool with_payments) {
  RandomizedOutcome out;
  out.exact = true;
  for (const RandomLeaf& leaf : mech.Leaves()) {
    out.branches.push_back(
        {leaf.probability, leaf.label, RunLeaf(mech, bids, leaf, with_payments)});
  }
  return out;
}

std::size_t PickLeaf(const std::vector<RandomLeaf>& leaves,
                     std::uint64_t draw) {
  // u = draw / 2^64 falls in the leaf whose cumulative interval contains it.
  Rational u(mpz_class(std::to_string(draw)), 1);
  u /= Rational(mpz_class(1) << 64, 1);
  Rational cumulative = 0;
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    cumulative += leaves[k].probability;
    if (u < cumulative) return k;
  }
  return leaves.size() - 1;
}

RandomizedOutcome RunSampled(Mechanism& mech,
                             const std::vector<Rational>& bids,
                             std::uint64_t seed, bool with_payments) {
  const std::vector<RandomLeaf> leaves = mech.Leaves();
  std::mt19937_64 rng(seed);
  const RandomLeaf& leaf = leaves[PickLeaf(leaves, rng())];
  RandomizedOutcome out;
  out.exact = false;
  out.seed = seed;
  out.branches.push_back(
      {Rational(1), leaf.label, RunLeaf(mech, bids, leaf, with_payments)});
  return out;
}

AgentSet RandMechSmLeaf(const Instance& inst, AgentSet ground,
                        bool singleton_branch, std::string* branch) {
  if (singleton_branch) {
    const int best = BestAffordableSingleton(inst, ground);
    Tag(branch, "returned i*");
    return best < 0 ? AgentSet() : AgentSet::Single(best);
  }
  Tag(branch, "greedy");
  return GreedySm(inst, ground, inst.budget() / 2);
}

AgentSet MechSmAllocate(const Instance& inst, AgentSet ground,
                        std::string* branch) {
  const int best = BestAffordableSingleton(inst, ground);
  if (best < 0) {
    Tag(branch, "no affordable agent");
    return {};
  }
  const Rational rest = BruteOpt(inst, ground.without(best)).value;
  if (SurdTimesAtLeast(SqrtSixPlusTwo(), SingletonValue(inst, best), rest)) {
    Tag(branch, "returned i*");
    return AgentSet::Single(best);
  }
  Tag(branch, "greedy");
  return GreedySm(inst, ground, inst.budget() / 2);
}

AgentSet MechSmFracAllocate(const Instance& inst, AgentSet ground,
                            const Surd& inner_guard, const OptFProvider& opt_f,
                            const Rational& budget_arg, std::string* branch) {
  const int best = BestAffordableSingleton(inst, ground);
  if (best < 0) {
    Tag(branch, "no affordable agent");
    return {};
  }
  const AgentSet rest = inst.Affordable(ground).without(best);
  if (SurdTimesAtLeast(inner_guard, SingletonValue(inst, best), opt_f(inst, rest))) {
    Tag(branch, "returned i*");
    return AgentSet::Single(best);
  }
  Tag(branch, "greedy");
  return GreedySm(inst, ground, budget_arg);
}

AgentSet ProportionalShare(const std::vector<Rational>& values,
                           const std::vector<Rational>& bids,
                           const Rational& budget, AgentSet ground) {
  std::vector<int> order;
  for (int i : ground) {
    const std::size_t k = static_cast<std::size_t>(i);
    if (sgn(values[k]) > 0 && bids[k] <= budget) order.push_back(i);
  }
  // Densest first: v_a / c_a > v_b / c_b, zero bids first, lower index on ties.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Rational& ca = bids[static_cast<std::size_t>(a)];
    const Rational& cb = bids[static_cast<std::size_t>(b)];
    if (sgn(ca) == 0 || sgn(cb) == 0) return sgn(ca) == 0 && sgn(cb) != 0;
    return values[static_cast<std::size_t>(a)] * cb >
           values[static_cast<std::size_t>(b)] * ca;
  });

  if (BreakpointLog* log = BreakpointLog::Current();
      log != nullptr && ground.contains(log->agent()) &&
      sgn(values[static_cast<std::size_t>(log->agent())]) > 0) {
    // Bids of the watched agent where its position or its acceptance changes.
    const int w = log->agent();
    const Rational& vw = values[static_cast<std::size_t>(w)];
    Rational prefix = 0;
    log->Add(budget * vw / (prefix + vw));
    for (int j : order) {
      if (j == w) continue;
      const Rational& vj = values[static_cast<std::size_t>(j)];
      log->Add(vw * bids[static_cast<std::size_t>(j)] / vj);
      prefix += vj;
      log->Add(budget * vw / (prefix + vw));
    }
  }

  AgentSet out;
  Rational total = 0;
  for (int k : order) {
    const Rational& vk = values[static_cast<std::size_t>(k)];
    total += vk;
    if (bids[static_cast<std::size_t>(k)] * total > budget * vk) break;
    out = out.with(k);
  }
  return out;
}

AgentSet AdditiveMechanismLeaf(const std::vector<Rational>& values,
                               const std::vector<Rational>& bids,
                               const Rational& budget, AgentSet ground,
                               bool singleton_branch, std::string* branch) {
  if (singleton_branch) {
    int best = -1;
    for (int i : ground) {
      const std::size_t k = static_cast<std::size_t>(i);
      if (bids[k] > budget) continue;
      if (best < 0 || values[k] > values[static_cast<std::size_t>(best)]) {
        best = i;
      }
    }
    Tag(branch, "returned i*");
    return best < 0 ? AgentSet() : AgentSet::Single(best);
  }
  Tag(branch, "proportional share");
  return ProportionalShare(values, bids, budget, ground);
}

std::unique_ptr<Mechanism> MakeMechanism(std::string_view id,
                                         const Instance& inst,
                                         const MechanismOptions& options) {
  if (id == "greedy-sm") return std::make_unique<GreedySmMechanism>(inst, false);
  if (id == "canary-pay-bid") {
    return std::make_unique<GreedySmMechanism>(inst, true);
  }
  if (id == "rand-mech-sm") return std::make_unique<RandMechSm>(inst);
  if (id == "mech-sm") return std::make_unique<MechSm>(inst);
  if (id == "mech-sm-frac") {
    return std::make_unique<MechSmFrac>(inst, options, false);
  }
  if (id == "mech-sm-frac-var") {
    return std::make_unique<MechSmFrac>(inst, options, true);
  }
  if (id == "rand-mech-symsm") return std::make_unique<RandMechSymSm>(inst);
  if (id == "det-mech-symsm") return std::make_unique<DetMechSymSm>(inst);
  if (id == "rand-mech-ucut") return std::make_unique<RandMechUCut>(inst);
  if (id == "det-mech-ucut") return std::make_unique<DetMechUCut>(inst, options);
  if (id == "det-mech-symsm-frac") {
    return std::make_unique<DetMechSymSmFrac>(inst, options, false);
  }
  if (id == "det-mech-symsm-frac-tuned") {
    return std::make_unique<DetMechSymSmFrac>(inst, options, true);
  }
  if (id == "additive-mechanism") {
    return std::make_unique<AdditiveMechanism>(inst);
  }
  if (id == "main-xos") return std::make_unique<MainXos>(inst);
  throw std::invalid_argument("unknown mechanism '" + std::string(id) + "'");
}

const std::vector<MechanismInfo>& MechanismCatalog() {
  static const std::vector<MechanismInfo> catalog = {
      {"greedy-sm", false, std::nullopt,
       "density greedy with budget B/2 and threshold payments"},
      {"rand-mech-sm", true, Surd::FromRational(5),
       "i* w.p. 2/5, greedy w.p. 3/5 (monotone submodular)"},
      {"mech-sm", false, Surd{3, 1, 6},
       "i* or greedy by a (2 + sqrt 6) guard (monotone submodular)"},
      {"mech-sm-frac", false, std::nullopt,
       "i* or greedy by a guard against the relaxation"},
      {"mech-sm-frac-var", false, std::nullopt,
       "mech-sm-frac with greedy budget gamma B/2"},
      {"rand-mech-symsm", true, Surd::FromRational(10),
       "rand-mech-sm on the better side of an exact local optimum"},
      {"det-mech-symsm", false, Surd{6, 2, 6},
       "mech-sm on the better side of an exact local optimum"},
      {"rand-mech-ucut", true, Surd::FromRational(10),
       "rand-mech-sm on a uniformly random side of an exact local optimum"},
      {"det-mech-ucut", false, Surd::FromRational(Rational(109, 4)),
       "26.25 guard, exact local search, mech-sm-frac on the better side"},
      {"det-mech-symsm-frac", false, Surd::FromRational(Rational(1468, 25)),
       "single-item guard, approximate local search, mech-sm-frac-var (rho = 4)"},
      {"det-mech-symsm-frac-tuned", false,
       Surd::FromRational(Rational(109, 4)),
       "det-mech-symsm-frac with a 26.245 single-item guard for weighted cut"},
      {"additive-mechanism", true, Surd::FromRational(3),
       "i* w.p. 1/3, proportional share w.p. 2/3 (additive)"},
      {"main-xos", true, Surd::FromRational(244),
       "best item w.p. 2/25, sample-and-price otherwise (xos)"},
      {"canary-pay-bid", false, std::nullopt,
       "greedy-sm paying bids; not truthful"},
  };
  return catalog;
}

const MechanismInfo& FindMechanismInfo(std::string_view id) {
  for (const MechanismInfo& info : MechanismCatalog()) {
    if (info.id == id) return info;
  }
  throw std::invalid_argument("unknown mechanism '" + std::string(id) + "'");
}

}  // namespace bfm
