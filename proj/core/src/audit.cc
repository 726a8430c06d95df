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

#include "bfm/audit.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bfm/brute_force.h"
#include "bfm/instance_io.h"

namespace bfm {
namespace {

// Distance of the probes on either side of a threshold.
const Rational& ThresholdNudge() {
  static const Rational nudge = InversePowerOfTwo(20);
  return nudge;
}

std::string BidsToString(const std::vector<Rational>& bids) {
  std::string out = "[";
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (i > 0) out += ",";
    out += ToString(bids[i]);
  }
  return out + "]";
}

std::string LeafWitness(const RandomLeaf& leaf) {
  return "leaf=" + leaf.label + "#" + std::to_string(leaf.code);
}

class CheckSet {
 public:
  void Fail(const std::string& property, const std::string& witness) {
    AuditCheck& check = Get(property);
    if (check.pass) {
      check.pass = false;
      check.witness = witness;
    }
  }
  void Touch(const std::string& property) { Get(property); }
  std::vector<AuditCheck> Take() { return std::move(checks_); }

 private:
  AuditCheck& Get(const std::string& property) {
    for (AuditCheck& check : checks_) {
      if (check.property == property) return check;
    }
    checks_.push_back({property, true, ""});
    return checks_.back();
  }
  std::vector<AuditCheck> checks_;
};

// Incentive checks of one leaf; returns the sum of the payments.
Rational AuditLeaf(Mechanism& mech, const RandomLeaf& leaf,
                   const AuditOptions& options, AgentSet winners,
                   CheckSet& checks) {
  const Instance& inst = mech.instance();
  const std::vector<Rational>& costs = inst.costs();
  const std::string where = LeafWitness(leaf);
  Rational paid = 0;
  for (int i = 0; i < mech.n(); ++i) {
    const Rational& cost = costs[static_cast<std::size_t>(i)];
    const std::string who = where + " agent=" + std::to_string(i + 1);
    Threshold threshold;
    try {
      threshold = ThresholdFor(mech, costs, leaf, i, options.threshold);
    } catch (const NonMonotoneDetected& e) {
      checks.Fail("monotone", who + " " + e.what());
      continue;
    }
    auto payment = [&](const Rational& bid) {
      return mech.pays_bids() ? bid : std::max(threshold.value, bid);
    };
    std::vector<Rational> probe = costs;
    auto wins = [&](const Rational& bid) {
      probe[static_cast<std::size_t>(i)] = bid;
      return mech.Allocate(probe, leaf, nullptr).contains(i);
    };
    const bool truth_wins = winners.contains(i);
    const Rational truth_utility =
        truth_wins ? Rational(payment(cost) - cost) : Rational(0);
    if (truth_wins) {
      const Rational pay = payment(cost);
      paid += pay;
      if (pay < cost) {
        checks.Fail("individually-rational",
                    who + " payment=" + ToString(pay) + " cost=" + ToString(cost));
      }
    }

    std::vector<Rational> grid = DeviationGrid(cost, inst.budget());
    grid.push_back(cost);
    if (threshold.ever_wins) {
      grid.push_back(threshold.value + ThresholdNudge());
      if (threshold.value >= ThresholdNudge()) {
        grid.push_back(threshold.value - ThresholdNudge());
      }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool lost_below = false;
    Rational lost_at;
    for (const Rational& bid : grid) {
      const bool won = bid == cost ? truth_wins : wins(bid);
      if (!won && !lost_below) {
        lost_below = true;
        lost_at = bid;
      }
      if (won && lost_below) {
        checks.Fail("monotone", who + " loses at " + ToString(lost_at) +
                                    " but wins at " + ToString(bid) +
                                    " bids=" + BidsToString(costs));
      }
      if (bid == cost) continue;
      const Rational utility = won ? Rational(payment(bid) - cost) : Rational(0);
      if (utility > truth_utility) {
        checks.Fail("truthful", who + " deviation=" + ToString(bid) +
                                    " utility=" + ToString(utility) +
                                    " truthful_utility=" +
                                    ToString(truth_utility) +
                                    " bids=" + BidsToString(costs));
      }
    }
  }
  return paid;
}

bool RatioBoundApplies(std::string_view id, const AuditOptions& options) {
  // Catalog bounds assume the default relaxation gap and accuracy.
  if (options.mechanism.rho.has_value()) return false;
  if (id == "det-mech-symsm-frac-tuned" &&
      options.mechanism.eps != Rational(1, 200)) {
    return false;
  }
  return true;
}

}  // namespace

Rational ExactExpectation(const RandomizedOutcome& outcome) {
  Rational total_probability = 0;
  Rational expectation = 0;
  for (const OutcomeBranch& branch : outcome.branches) {
    total_probability += branch.probability;
    expectation += branch.probability * branch.result.value;
  }
  if (total_probability != 1) {
    throw std::logic_error("leaf probabilities sum to " +
                           ToString(total_probability));
  }
  return expectation;
}

std::vector<Rational> DeviationGrid(const Rational& cost,
                                    const Rational& budget) {
  static const Rational kMultipliers[] = {
      Rational(1, 4),  Rational(1, 3), Rational(1, 2),  Rational(2, 3),
      Rational(3, 4),  Rational(9, 10), Rational(11, 10), Rational(5, 4),
      Rational(3, 2),  Rational(2),    Rational(3),     Rational(4)};
  const Rational base = sgn(cost) > 0 ? cost : Rational(budget / 4);
  std::vector<Rational> grid;
  grid.emplace_back(0);
  for (const Rational& m : kMultipliers) grid.emplace_back(base * m);
  return grid;
}

std::optional<Rational> Ratio(const Rational& opt, const Rational& value) {
  if (sgn(value) == 0) {
    if (sgn(opt) == 0) return Rational(1);
    return std::nullopt;
  }
  return Rational(opt / value);
}

bool AuditReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.pass; });
}

const AuditCheck* AuditReport::Find(std::string_view property) const {
  for (const AuditCheck& check : checks) {
    if (check.property == property) return &check;
  }
  return nullptr;
}

AuditReport AuditMechanism(std::string_view mechanism_id, const Instance& inst,
                           const AuditOptions& options) {
  std::unique_ptr<Mechanism> mech =
      MakeMechanism(mechanism_id, inst, options.mechanism);
  const MechanismInfo& info = FindMechanismInfo(mechanism_id);

  AuditReport report;
  report.instance_digest = InstanceDigest(inst);
  report.mechanism = std::string(mechanism_id);
  report.n = inst.n();
  report.budget = inst.budget();
  report.opt = BruteOpt(mech->instance()).value;

  std::vector<RandomLeaf> leaves = mech->Leaves();
  if (!options.exact) {
    std::mt19937_64 rng(options.seed);
    RandomLeaf picked = leaves[PickLeaf(leaves, rng())];
    picked.probability = 1;
    leaves = {picked};
  }

  CheckSet checks;
  if (options.incentives) {
    checks.Touch("monotone");
    checks.Touch("truthful");
    checks.Touch("individually-rational");
    checks.Touch("budget-feasible");
  }
  RandomizedOutcome outcome;
  outcome.exact = options.exact;
  outcome.seed = options.seed;
  for (const RandomLeaf& leaf : leaves) {
    MechanismResult result = RunLeaf(*mech, inst.costs(), leaf, false);
    if (options.incentives) {
      const Rational paid =
          AuditLeaf(*mech, leaf, options, result.winners, checks);
      if (paid > inst.budget()) {
        checks.Fail("budget-feasible", LeafWitness(leaf) + " paid=" +
                                           ToString(paid) + " budget=" +
                                           ToString(inst.budget()));
      }
    }
    outcome.branches.push_back({leaf.probability, leaf.label, std::move(result)});
  }
  report.value = ExactExpectation(outcome);
  report.ratio = Ratio(report.opt, report.value);

  const bool bound_meaningful = options.exact || !info.randomized;
  if (options.check_ratio && info.ratio_bound.has_value() && bound_meaningful &&
      RatioBoundApplies(mechanism_id, options)) {
    checks.Touch("ratio-bound");
    if (!WithinFactor(report.opt, *info.ratio_bound, report.value)) {
      checks.Fail("ratio-bound",
                  "opt=" + ToString(report.opt) + " value=" +
                      ToString(report.value) + " bound=" +
                      SurdToString(*info.ratio_bound));
    }
  }
  report.checks = checks.Take();
  return report;
}

std::string CsvHeader(int decimals) {
  std::string header =
      "instance_digest,mechanism,n,B,opt,value_or_expectation,ratio,"
      "all_checks_passed";
  if (decimals > 0) header += ",ratio_decimal";
  return header;
}

std::string CsvRow(const AuditReport& report, int decimals) {
  std::ostringstream row;
  row << report.instance_digest << ',' << report.mechanism << ',' << report.n
      << ',' << ToString(report.budget) << ',' << ToString(report.opt) << ','
      << ToString(report.value) << ','
      << (report.ratio ? ToString(*report.ratio) : std::string("inf")) << ','
      << (report.all_passed() ? "true" : "false");
  if (decimals > 0) {
    row << ',' << (report.ratio ? ToDecimal(*report.ratio, decimals)
                                : std::string("inf"));
  }
  return row.str();
}

RatioSummary MeasureRatio(std::string_view mechanism_id,
                          const GeneratorSpec& base, int n_max, int count,
                          std::uint64_t seed, const AuditOptions& options,
                          std::ostream* csv, int decimals) {
  RatioSummary summary;
  if (csv != nullptr) *csv << CsvHeader(decimals) << '\n';
  for (int k = 0; k < count; ++k) {
    GeneratorSpec spec = base;
    spec.seed = seed + static_cast<std::uint64_t>(k);
    if (n_max > base.n) spec.n = base.n + k % (n_max - base.n + 1);
    const Instance inst = Generate(spec);
    AuditOptions per_instance = options;
    per_instance.seed = options.seed + static_cast<std::uint64_t>(k);
    const AuditReport report = AuditMechanism(mechanism_id, inst, per_instance);
    ++summary.instances;
    if (!report.all_passed()) ++summary.failures;
    if (!report.ratio.has_value()) {
      if (!summary.infinite) summary.worst_digest = report.instance_digest;
      summary.infinite = true;
    } else if (!summary.infinite &&
               (!summary.worst || *report.ratio > *summary.worst)) {
      summary.worst = report.ratio;
      summary.worst_digest = report.instance_digest;
    }
    if (csv != nullptr) *csv << CsvRow(report, decimals) << '\n';
  }
  if (summary.infinite) summary.worst.reset();
  return summary;
}

}  // namespace bfm
