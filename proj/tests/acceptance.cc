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

// Acceptance suite. Prints one PASS/FAIL line per criterion on stdout and
// per-row detail on stderr; exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bfm/audit.h"
#include "bfm/brute_force.h"
#include "bfm/frac_params.h"
#include "bfm/generators.h"
#include "bfm/instance_io.h"
#include "bfm/greedy.h"
#include "bfm/local_search.h"
#include "bfm/lp_pipage.h"
#include "bfm/ls_greedy.h"
#include "bfm/mechanisms.h"
#include "bfm/payments.h"
#include "bfm/structure.h"
#include "bfm/valuation.h"

namespace bfm {
namespace {

// Oracle queries of the approximate local search stay below
// kQueryConstant * (1/eps) * n^3 * ln n on the sweep below. Measured worst
// case 0.026 (n = 6, eps = 1/2); pinned with headroom.
constexpr double kQueryConstant = 0.05;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

GeneratorSpec Spec(const std::string& family, int n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  return spec;
}

GeneratorSpec WeightedCut(int n, std::uint64_t seed) {
  GeneratorSpec spec = Spec("erdos-renyi-cut", n, seed);
  spec.weight_max = 9;
  return spec;
}

class Criterion {
 public:
  Criterion(int number, std::string name)
      : number_(number), name_(std::move(name)), start_(Clock::now()) {}

  // Records a violation; keeps the first few for the report.
  void Fail(const std::string& what) {
    ++violations_;
    if (violations_ <= 5) std::cerr << "  [" << name_ << "] " << what << '\n';
  }
  void Check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok) Fail(what());
  }
  void Note(const std::string& text) { notes_ << ' ' << text; }

  bool Finish(bool extra_ok = true) {
    const bool pass = violations_ == 0 && extra_ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (pass ? "PASS" : "FAIL") << ' ' << number_ << ' ' << name_
         << ": checks=" << checks_ << " violations=" << violations_
         << notes_.str() << " time=" << Seconds(start_) << "s";
    std::cout << line.str() << std::endl;
    return pass;
  }

 private:
  int number_;
  std::string name_;
  Clock::time_point start_;
  long checks_ = 0;
  long violations_ = 0;
  std::ostringstream notes_;
};

std::string Show(const Instance& inst) { return InstanceDigest(inst); }

bool LsGreedyGuaranteeHolds() {
  Criterion c(1, "ls-greedy-guarantee");
  const Rational eps(1, 10);
  const Rational floor = LsGreedyGuarantee(eps);
  auto check = [&](const Instance& inst) {
    const AgentSet chosen = LsGreedy(inst, eps);
    const Rational value = inst.Value(chosen);
    const Rational opt = BruteOpt(inst).value;
    c.Check(inst.Feasible(chosen) && value >= floor * opt, [&] {
      return Show(inst) + " value=" + ToString(value) + " opt=" + ToString(opt);
    });
  };
  int cuts = 0;
  for (int k = 0; k < 550; ++k, ++cuts) {
    check(Generate(WeightedCut(2 + k % 11, 1000 + k)));
  }
  int stars = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int seed = 0; seed < 25; ++seed, ++stars) {
      check(Generate(Spec("star-knapsack", n, 5000 + 100 * n + seed)));
    }
  }
  c.Note("cut=" + std::to_string(cuts) + " star=" + std::to_string(stars));
  return c.Finish();
}

struct RatioRow {
  const char* mechanism;
  GeneratorSpec base;
  int n_max;
};

bool RatioTableHolds() {
  Criterion c(2, "ratio-table");
  GeneratorSpec unweighted = Spec("erdos-renyi-cut", 3, 0);
  const std::vector<RatioRow> rows = {
      {"rand-mech-sm", Spec("tabular-coverage", 3, 0), 10},
      {"rand-mech-sm", Spec("random-additive", 3, 0), 10},
      {"mech-sm", Spec("tabular-coverage", 3, 0), 10},
      {"mech-sm", Spec("random-additive", 3, 0), 10},
      {"rand-mech-symsm", WeightedCut(3, 0), 10},
      {"rand-mech-symsm", Spec("tabular-symmetric", 3, 0), 10},
      {"det-mech-symsm", WeightedCut(3, 0), 10},
      {"det-mech-symsm", Spec("tabular-symmetric", 3, 0), 10},
      {"rand-mech-ucut", unweighted, 10},
      {"det-mech-ucut", unweighted, 10},
      {"det-mech-symsm-frac", WeightedCut(3, 0), 10},
      {"det-mech-symsm-frac-tuned", WeightedCut(3, 0), 10},
      {"det-mech-symsm-frac-tuned", Spec("star-knapsack", 3, 0), 10},
      {"main-xos", Spec("random-xos", 3, 0), 10},
  };
  AuditOptions options;
  options.incentives = false;
  std::uint64_t seed = 20000;
  for (const RatioRow& row : rows) {
    const auto start = Clock::now();
    const RatioSummary s =
        MeasureRatio(row.mechanism, row.base, row.n_max, 200, seed, options);
    seed += 1000;
    const std::string bound =
        SurdToString(*FindMechanismInfo(row.mechanism).ratio_bound);
    std::cerr << "  ratio " << row.mechanism << " on " << row.base.family
              << ": instances=" << s.instances << " worst="
              << (s.worst ? ToString(*s.worst) : std::string("inf"))
              << " bound=" << bound << " failures=" << s.failures << " ("
              << Seconds(start) << "s)\n";
    c.Check(s.failures == 0 && !s.infinite && s.instances >= 200, [&] {
      return std::string(row.mechanism) + " on " + row.base.family +
             " failures=" + std::to_string(s.failures) +
             " worst instance " + s.worst_digest;
    });
  }
  c.Note("rows=" + std::to_string(rows.size()));
  return c.Finish();
}

struct AuditRow {
  const char* mechanism;
  GeneratorSpec base;
  int n_max;
  int count;
};

bool IncentiveAuditHolds() {
  Criterion c(3, "incentive-audit");
  const std::vector<AuditRow> rows = {
      {"rand-mech-sm", Spec("tabular-coverage", 2, 0), 10, 40},
      {"rand-mech-sm", Spec("random-additive", 2, 0), 10, 40},
      {"mech-sm", Spec("tabular-coverage", 2, 0), 10, 40},
      {"mech-sm", Spec("random-additive", 2, 0), 10, 40},
      {"mech-sm-frac", WeightedCut(2, 0), 10, 30},
      {"mech-sm-frac", Spec("tabular-coverage", 2, 0), 10, 30},
      {"mech-sm-frac-var", WeightedCut(2, 0), 10, 30},
      {"rand-mech-symsm", WeightedCut(2, 0), 10, 40},
      {"rand-mech-symsm", Spec("tabular-symmetric", 2, 0), 10, 40},
      {"det-mech-symsm", WeightedCut(2, 0), 10, 40},
      {"det-mech-symsm", Spec("tabular-symmetric", 2, 0), 10, 40},
      {"rand-mech-ucut", Spec("erdos-renyi-cut", 2, 0), 10, 40},
      {"det-mech-ucut", Spec("erdos-renyi-cut", 2, 0), 10, 30},
      {"det-mech-symsm-frac", WeightedCut(2, 0), 10, 30},
      {"det-mech-symsm-frac-tuned", WeightedCut(2, 0), 10, 30},
      {"det-mech-symsm-frac-tuned", Spec("star-knapsack", 2, 0), 10, 30},
      {"additive-mechanism", Spec("random-additive", 2, 0), 10, 40},
      {"main-xos", Spec("random-xos", 2, 0), 10, 20},
  };
  AuditOptions options;
  options.check_ratio = false;
  std::uint64_t seed = 40000;
  int audited = 0;
  for (const AuditRow& row : rows) {
    const auto start = Clock::now();
    const RatioSummary s =
        MeasureRatio(row.mechanism, row.base, row.n_max, row.count, seed, options);
    seed += 1000;
    audited += s.instances;
    std::cerr << "  audit " << row.mechanism << " on " << row.base.family
              << ": instances=" << s.instances << " failures=" << s.failures
              << " (" << Seconds(start) << "s)\n";
    c.Check(s.failures == 0, [&] {
      return std::string(row.mechanism) + " on " + row.base.family +
             " failures=" + std::to_string(s.failures);
    });
  }
  // The pay-your-bid canary must be caught on the same kind of suite.
  int canary_caught = 0;
  for (int k = 0; k < 25; ++k) {
    const Instance inst = Generate(Spec("tabular-coverage", 2 + k % 7, 41000 + k));
    const AuditReport r = AuditMechanism("canary-pay-bid", inst, options);
    const AuditCheck* truthful = r.Find("truthful");
    if (truthful != nullptr && !truthful->pass) {
      if (canary_caught == 0) std::cerr << "  canary witness: " << truthful->witness << '\n';
      ++canary_caught;
    }
  }
  c.Check(canary_caught > 0, [] { return std::string("canary passed the audit"); });
  c.Note("instances=" + std::to_string(audited) +
         " canary_caught=" + std::to_string(canary_caught) + "/25");
  return c.Finish();
}

// The side with the larger budgeted optimum.
AgentSet BetterSide(const Instance& inst, AgentSet s) {
  const AgentSet rest = inst.agents() - s;
  return BruteOpt(inst, s).value >= BruteOpt(inst, rest).value ? s : rest;
}

bool LocalOptimumStructureHolds() {
  Criterion c(4, "local-optimum-monotonicity");
  const Rational epsilons[] = {Rational(1, 2), Rational(1, 10), Rational(1, 50)};
  int instances = 0;
  for (int k = 0; k < 250; ++k, ++instances) {
    const GeneratorSpec spec = k % 2 == 0 ? WeightedCut(2 + k % 11, 60000 + k)
                                          : Spec("erdos-renyi-cut", 2 + k % 11, 60000 + k);
    const Instance inst = Generate(spec);
    const AgentSet s = ApproxLocalSearch(inst, 0).set;
    for (AgentSet side : {s, inst.agents() - s}) {
      const MonotonicityWitness w = VerifyRestrictedMonotone(inst, side);
      c.Check(w.holds, [&] {
        return Show(inst) + " side=" + side.ToString() + " v(" +
               w.smaller.ToString() + ") > v(" + w.larger.ToString() + ")";
      });
    }
    for (const Rational& eps : epsilons) {
      // Local search with eps/4 is a (1 + eps/(4 n^2)) local optimum.
      const AgentSet approx = ApproxLocalSearch(inst, eps / 4).set;
      const AgentSet x = BetterSide(inst, approx);
      const QuasiMonotoneWitness w =
          VerifyQuasiMonotone(inst, x, eps, BruteOpt(inst, x).value);
      c.Check(w.holds, [&] {
        return Show(inst) + " eps=" + ToString(eps) + " side=" + x.ToString() +
               " T=" + w.t.ToString() + " agent=" + std::to_string(w.agent + 1);
      });
    }
  }
  c.Note("instances=" + std::to_string(instances));
  return c.Finish();
}

bool LpPipageHolds() {
  Criterion c(5, "lp-pipage");
  std::mt19937_64 rng(70000);
  Rational worst_ratio = 0;
  int instances = 0;
  for (int k = 0; k < 220; ++k, ++instances) {
    const Instance inst = Generate(WeightedCut(2 + k % 11, 70000 + k));
    const PipageBoundReport r = VerifyPipageBound(inst);
    if (r.ratio > worst_ratio) worst_ratio = r.ratio;
    c.Check(r.relaxation_holds && r.beta_bound_holds && r.four_bound_holds, [&] {
      return Show(inst) + " opt=" + ToString(r.opt) + " opt_f=" + ToString(r.opt_f) +
             " beta=" + ToString(r.beta);
    });
    c.Check(r.rounding_monotone && r.at_most_one_fractional && r.last_coordinate_bound,
            [&] { return Show(inst) + " rounding of the LP optimum"; });
    const CutLpModel model = MakeCutLpModel(inst, inst.Affordable());
    for (int p = 0; p < 200; ++p) {
      const std::vector<Rational> x = RandomFractionalPoint(model, rng);
      const Rational quadratic = QuadraticObjective(model, x);
      const Rational linear = LinearObjective(model, x);
      c.Check(2 * quadratic >= linear, [&] {
        return Show(inst) + " F=" + ToString(quadratic) + " L=" + ToString(linear);
      });
      const PipageResult rounded = PipageRound(model, x);
      Rational previous = quadratic;
      bool monotone = true;
      for (const PipageStep& step : rounded.trace) {
        monotone = monotone && step.value_after >= previous;
        previous = step.value_after;
      }
      int fractional = 0;
      for (const Rational& xi : rounded.x) {
        if (xi != 0 && xi != 1) ++fractional;
      }
      c.Check(monotone && fractional <= 1 && rounded.value >= quadratic,
              [&] { return Show(inst) + " rounding of a random point"; });
    }
  }
  c.Note("instances=" + std::to_string(instances) +
         " worst_opt_f_over_opt=" + ToString(worst_ratio));
  return c.Finish();
}

bool ReductionsHold() {
  Criterion c(6, "normalization-and-knapsack-reduction");
  int merged = 0;
  int instances = 0;
  for (int k = 0; k < 200; ++k, ++instances) {
    GeneratorSpec spec = WeightedCut(2 + k % 11, 80000 + k);
    spec.cost_max = 30;
    spec.budget_fraction = Rational(1, 6);
    const Instance inst = Generate(spec);
    const Instance norm = NormalizeCosts(inst);
    if (MergedAgent(norm) >= 0) ++merged;
    const std::uint64_t full = norm.agents().bits();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const AgentSet t(mask);
      const AgentSet lifted = LiftFromNormalized(inst, t);
      c.Check(norm.Value(t) == inst.Value(lifted), [&] {
        return Show(inst) + " normalized set " + t.ToString() + " changes value";
      });
      if (norm.Feasible(t)) {
        c.Check(inst.Feasible(lifted) && norm.CostOf(t) == inst.CostOf(lifted),
                [&] { return Show(inst) + " feasible set " + t.ToString(); });
      }
    }
    c.Check(BruteOpt(norm).value == BruteOpt(inst).value,
            [&] { return Show(inst) + " optimum changes"; });
  }
  std::mt19937_64 rng(81000);
  int knapsacks = 0;
  for (int items = 1; items <= 11; ++items) {
    for (int round = 0; round < 30; ++round, ++knapsacks) {
      std::vector<Rational> values;
      std::vector<Rational> costs;
      Rational total = 0;
      for (int i = 0; i < items; ++i) {
        values.emplace_back(UniformInt(rng, 1, 20));
        costs.emplace_back(UniformInt(rng, 1, 10));
        total += costs.back();
      }
      const Rational budget = total * UniformInt(rng, 1, 3) / 4;
      const Instance knapsack(costs, budget,
                              std::make_shared<AdditiveValuation>(values));
      const Instance star = KnapsackToCut(values, costs, budget);
      const Rational direct = BruteOpt(knapsack).value;
      const Rational via_cut = BruteOpt(star).value;
      c.Check(direct == via_cut, [&] {
        return "knapsack opt " + ToString(direct) + " vs cut opt " + ToString(via_cut);
      });
    }
  }
  c.Note("cut=" + std::to_string(instances) + " merged=" + std::to_string(merged) +
         " knapsack=" + std::to_string(knapsacks));
  return c.Finish(merged > 0);
}

// Myerson payments of Greedy-SM(ground, B/2) against the per-winner bound
// B * marginal / v(S), in acceptance order.
void CheckGreedyPayments(Criterion& c, const Instance& inst, AgentSet ground,
                         int* inexact) {
  GreedyTrace trace;
  const Rational half = inst.budget() / 2;
  const AgentSet s = GreedySm(inst, ground, half, &trace);
  const Rational total = inst.Value(s);
  Rational paid = 0;
  for (const GreedyStep& step : trace.accepted) {
    const int i = step.agent;
    auto wins = [&](const Rational& bid) {
      std::vector<Rational> bids = inst.costs();
      bids[static_cast<std::size_t>(i)] = bid;
      return GreedySm(inst.WithCosts(bids), ground, half).contains(i);
    };
    const Threshold t = FindThreshold(i, wins, inst.budget(), &inst.cost(i));
    if (!t.exact) ++*inexact;
    const Rational payment = t.value > inst.cost(i) ? t.value : inst.cost(i);
    paid += payment;
    c.Check(payment * total <= inst.budget() * step.marginal, [&] {
      return Show(inst) + " agent " + std::to_string(i + 1) + " paid " +
             ToString(payment) + " marginal " + ToString(step.marginal) +
             " v(S)=" + ToString(total);
    });
  }
  c.Check(paid <= inst.budget(), [&] { return Show(inst) + " greedy overpays"; });
}

// opt(X, B) <= 3 v(S) + 2 v(i*) for S = Greedy-SM(X, B/2).
void CheckHalfBudgetGreedy(Criterion& c, const Instance& inst, AgentSet ground) {
  const AgentSet s = GreedySm(inst, ground, inst.budget() / 2);
  const int best = BestAffordableSingleton(inst, ground);
  const Rational top = best < 0 ? Rational(0) : inst.Value(AgentSet::Single(best));
  const Rational opt = BruteOpt(inst, ground).value;
  c.Check(opt <= 3 * inst.Value(s) + 2 * top, [&] {
    return Show(inst) + " side=" + ground.ToString() + " opt=" + ToString(opt);
  });
}

// opt(X, B) <= ((1 + beta)/beta v(S) + v(i*)/beta) / (1 - eps) for
// S = Greedy-SM(X, beta B) on a (B, eps)-quasi-monotone side X.
void CheckScaledGreedy(Criterion& c, const Instance& inst, AgentSet ground,
                       const Rational& eps, const Rational& beta) {
  const AgentSet s = GreedySm(inst, ground, beta * inst.budget());
  const int best = BestAffordableSingleton(inst, ground);
  const Rational top = best < 0 ? Rational(0) : inst.Value(AgentSet::Single(best));
  const Rational opt = BruteOpt(inst, ground).value;
  c.Check((1 - eps) * beta * opt <= (1 + beta) * inst.Value(s) + top, [&] {
    return Show(inst) + " side=" + ground.ToString() + " eps=" + ToString(eps) +
           " beta=" + ToString(beta);
  });
}

bool GreedyBoundsHold() {
  Criterion c(7, "greedy-bounds");
  const Rational gamma = MakeFracParams(4, Rational(1, 200)).gamma;
  const Rational betas[] = {Rational(1, 2), gamma / 2};
  int inexact = 0;
  int sides = 0;
  for (int k = 0; k < 160; ++k) {
    const char* family = k % 2 == 0 ? "tabular-coverage" : "random-additive";
    const Instance inst = Generate(Spec(family, 1 + k % 10, 90000 + k));
    CheckHalfBudgetGreedy(c, inst, inst.agents());
    for (const Rational& beta : betas) CheckScaledGreedy(c, inst, inst.agents(), 0, beta);
    CheckGreedyPayments(c, inst, inst.agents(), &inexact);
    ++sides;
  }
  const Rational epsilons[] = {Rational(1, 2), Rational(1, 10)};
  for (int k = 0; k < 160; ++k) {
    const Instance inst = Generate(WeightedCut(2 + k % 9, 91000 + k));
    const AgentSet s = ApproxLocalSearch(inst, 0).set;
    for (AgentSet side : {s, inst.agents() - s}) {
      CheckHalfBudgetGreedy(c, inst, side);
      for (const Rational& beta : betas) CheckScaledGreedy(c, inst, side, 0, beta);
      CheckGreedyPayments(c, inst, side, &inexact);
      ++sides;
    }
    for (const Rational& eps : epsilons) {
      const AgentSet x = BetterSide(inst, ApproxLocalSearch(inst, eps / 4).set);
      if (!VerifyQuasiMonotone(inst, x, eps, BruteOpt(inst, x).value).holds) {
        c.Fail(Show(inst) + " side is not quasi-monotone");
        continue;
      }
      for (const Rational& beta : betas) CheckScaledGreedy(c, inst, x, eps, beta);
      ++sides;
    }
  }
  c.Note("sides=" + std::to_string(sides) +
         " bisection_thresholds=" + std::to_string(inexact));
  return c.Finish();
}

bool AdditiveMechanismHolds() {
  Criterion c(8, "additive-mechanism");
  AuditOptions options;
  int instances = 0;
  Rational worst = 0;
  for (int k = 0; k < 240; ++k, ++instances) {
    const Instance inst = Generate(Spec("random-additive", 1 + k % 12, 95000 + k));
    const AuditReport r = AuditMechanism("additive-mechanism", inst, options);
    if (r.ratio && *r.ratio > worst) worst = *r.ratio;
    c.Check(r.all_passed() && 3 * r.value >= r.opt, [&] {
      std::string failed;
      for (const AuditCheck& check : r.checks) {
        if (!check.pass) failed += " " + check.property + " " + check.witness;
      }
      return Show(inst) + failed;
    });
  }
  c.Note("instances=" + std::to_string(instances) + " worst_ratio=" + ToString(worst));
  return c.Finish();
}

bool QueryScalingHolds() {
  Criterion c(9, "local-search-query-scaling");
  const Rational epsilons[] = {Rational(1, 2), Rational(1, 8), Rational(1, 32)};
  double worst = 0;
  std::string worst_at;
  int runs = 0;
  for (int n = 6; n <= 14; ++n) {
    for (const Rational& eps : epsilons) {
      for (int seed = 0; seed < 6; ++seed, ++runs) {
        GeneratorSpec spec = WeightedCut(n, 99000 + 100 * n + seed);
        spec.weight_max = 50;
        const Instance inst = Generate(spec);
        const LocalSearchResult r = ApproxLocalSearch(inst, eps);
        const double scale = std::pow(n, 3) * std::log(n) / eps.get_d();
        const double ratio = static_cast<double>(r.oracle_queries) / scale;
        if (ratio > worst) {
          worst = ratio;
          worst_at = "n=" + std::to_string(n) + " eps=" + ToString(eps);
        }
        c.Check(ratio <= kQueryConstant, [&] {
          return Show(inst) + " queries=" + std::to_string(r.oracle_queries);
        });
      }
    }
  }
  std::ostringstream note;
  note << "runs=" << runs << " C=" << kQueryConstant << " worst=" << worst << " at "
       << worst_at;
  c.Note(note.str());
  return c.Finish();
}

}  // namespace
}  // namespace bfm

int main() {
  const std::vector<std::function<bool()>> criteria = {
      bfm::LsGreedyGuaranteeHolds, bfm::RatioTableHolds,
      bfm::IncentiveAuditHolds,    bfm::LocalOptimumStructureHolds,
      bfm::LpPipageHolds,          bfm::ReductionsHold,
      bfm::GreedyBoundsHold,       bfm::AdditiveMechanismHolds,
      bfm::QueryScalingHolds,
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    try {
      if (!criterion()) ++failed;
    } catch (const std::exception& e) {
      std::cout << "FAIL (exception: " << e.what() << ")" << std::endl;
      ++failed;
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
