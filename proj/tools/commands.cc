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

#include "commands.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfm/audit.h"
#include "bfm/brute_force.h"
#include "bfm/greedy.h"
#include "bfm/instance.h"
#include "bfm/instance_io.h"
#include "bfm/local_search.h"
#include "bfm/lp_pipage.h"
#include "bfm/ls_greedy.h"
#include "bfm/mechanisms.h"
#include "bfm/rational.h"
#include "bfm/surd.h"
#include "bfm/valuation.h"

namespace bfm::cli {
namespace {

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

Rational EpsOr(const CommonFlags& flags, const Rational& fallback) {
  return flags.eps ? ParseRational(*flags.eps) : fallback;
}

MechanismOptions MechanismFlags(const CommonFlags& flags) {
  MechanismOptions options;
  if (flags.eps) options.eps = ParseRational(*flags.eps);
  if (flags.rho) options.rho = ParseRational(*flags.rho);
  if (flags.gamma) options.gamma = ParseRational(*flags.gamma);
  return options;
}

bool Exact(const CommonFlags& flags) {
  if (flags.mode == "exact") return true;
  if (flags.mode == "sampled") return false;
  throw std::invalid_argument("--mode must be exact or sampled");
}

std::string PaymentsToString(const std::vector<Rational>& payments,
                             AgentSet winners) {
  std::string out = "{";
  bool first = true;
  for (int i : winners) {
    if (!first) out += ", ";
    out += std::to_string(i + 1) + ": " +
           ToString(payments[static_cast<std::size_t>(i)]);
    first = false;
  }
  return out + "}";
}

void PrintChecks(const AuditReport& report, std::ostream& os) {
  for (const AuditCheck& check : report.checks) {
    os << "  " << (check.pass ? "pass " : "FAIL ") << check.property;
    if (!check.pass) os << "  witness: " << check.witness;
    os << '\n';
  }
}

bool IsMechanism(const std::string& id) {
  for (const MechanismInfo& info : MechanismCatalog()) {
    if (info.id == id) return true;
  }
  return false;
}

// A row for a plain algorithm: one set, no payments.
AuditReport AlgorithmReport(const std::string& id, const Instance& inst,
                            AgentSet chosen) {
  AuditReport report;
  report.instance_digest = InstanceDigest(inst);
  report.mechanism = id;
  report.n = inst.n();
  report.budget = inst.budget();
  report.opt = BruteOpt(inst).value;
  report.value = inst.Value(chosen);
  report.ratio = Ratio(report.opt, report.value);
  report.checks.push_back({"budget-feasible", inst.Feasible(chosen),
                           "set=" + chosen.ToString()});
  return report;
}

int RunAlgorithm(const std::string& id, const Instance& inst,
                 const CommonFlags& flags) {
  AuditReport report;
  std::ostringstream summary;
  if (id == "ls-greedy") {
    const Rational eps = EpsOr(flags, Rational(1, 10));
    LsGreedyReport details;
    const AgentSet chosen = LsGreedy(inst, eps, &details);
    report = AlgorithmReport(id, inst, chosen);
    const Rational floor = LsGreedyGuarantee(eps) * report.opt;
    report.checks.push_back({"guarantee", report.value >= floor,
                             "value=" + ToString(report.value) +
                                 " floor=" + ToString(floor)});
    summary << "ls-greedy eps=" << ToString(eps) << '\n'
            << "  local optimum " << details.local_optimum.ToString() << '\n'
            << "  inside  " << details.inside.ToString() << " value "
            << ToString(details.inside_value) << '\n'
            << "  outside " << details.outside.ToString() << " value "
            << ToString(details.outside_value) << '\n'
            << "  chosen  " << details.chosen << ' ' << chosen.ToString()
            << '\n';
  } else if (id == "greedy-enum-sm") {
    const AgentSet chosen = GreedyEnumSm(inst, inst.agents());
    report = AlgorithmReport(id, inst, chosen);
    summary << "greedy-enum-sm " << chosen.ToString() << '\n';
  } else {
    throw std::invalid_argument("unknown algorithm or mechanism '" + id + "'");
  }
  summary << "  value " << ToString(report.value) << "  opt "
          << ToString(report.opt) << '\n';
  PrintChecks(report, summary);
  Output out(flags.out);
  if (out.to_file()) std::cout << summary.str();
  else std::cerr << summary.str();
  out.stream() << CsvHeader(flags.decimals) << '\n'
               << CsvRow(report, flags.decimals) << '\n';
  return report.all_passed() ? 0 : 1;
}

int RunMechanism(const std::string& id, const Instance& inst,
                 const CommonFlags& flags) {
  const MechanismOptions options = MechanismFlags(flags);
  std::unique_ptr<Mechanism> mech = MakeMechanism(id, inst, options);
  const bool exact = Exact(flags);
  const RandomizedOutcome outcome =
      exact ? RunExact(*mech, inst.costs())
            : RunSampled(*mech, inst.costs(), flags.seed);

  AuditReport report;
  report.instance_digest = InstanceDigest(inst);
  report.mechanism = id;
  report.n = inst.n();
  report.budget = inst.budget();
  report.opt = BruteOpt(inst).value;
  report.value = ExactExpectation(outcome);
  report.ratio = Ratio(report.opt, report.value);

  std::ostringstream summary;
  summary << id << (exact ? " (exact)" : " (sampled, seed " +
                                             std::to_string(flags.seed) + ")")
          << '\n';
  AuditCheck budget{"budget-feasible", true, ""};
  AuditCheck rational{"individually-rational", true, ""};
  for (const OutcomeBranch& branch : outcome.branches) {
    const MechanismResult& r = branch.result;
    Rational paid = 0;
    for (int i : r.winners) {
      const Rational& pay = r.payments[static_cast<std::size_t>(i)];
      paid += pay;
      if (pay < inst.cost(i) && rational.pass) {
        rational = {rational.property, false,
                    "leaf=" + branch.leaf + " agent=" + std::to_string(i + 1)};
      }
    }
    if (paid > inst.budget() && budget.pass) {
      budget = {budget.property, false,
                "leaf=" + branch.leaf + " paid=" + ToString(paid)};
    }
    summary << "  p=" << ToString(branch.probability) << " [" << branch.leaf
            << "] " << r.branch << "  winners " << r.winners.ToString()
            << "  value " << ToString(r.value) << "  payments "
            << PaymentsToString(r.payments, r.winners) << '\n';
  }
  report.checks = {budget, rational};
  const MechanismInfo& info = FindMechanismInfo(id);
  if (info.ratio_bound && (exact || !info.randomized) && !flags.rho) {
    report.checks.push_back(
        {"ratio-bound", WithinFactor(report.opt, *info.ratio_bound, report.value),
         "bound=" + SurdToString(*info.ratio_bound)});
  }
  summary << "  expected value " << ToString(report.value) << "  opt "
          << ToString(report.opt) << "  ratio "
          << (report.ratio ? ToString(*report.ratio) : "inf") << '\n';
  PrintChecks(report, summary);

  Output out(flags.out);
  if (out.to_file()) std::cout << summary.str();
  else std::cerr << summary.str();
  out.stream() << CsvHeader(flags.decimals) << '\n'
               << CsvRow(report, flags.decimals) << '\n';
  return report.all_passed() ? 0 : 1;
}

std::string VectorToString(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(values[i]);
  }
  return out + ")";
}

}  // namespace

int Generate(const GeneratorSpec& spec, const CommonFlags& flags) {
  const Instance inst = bfm::Generate(spec);
  Output out(flags.out);
  out.stream() << SerializeInstance(inst);
  return 0;
}

int Run(const std::string& algorithm, const std::string& instance_path,
        const CommonFlags& flags) {
  const Instance inst = LoadInstance(instance_path);
  if (IsMechanism(algorithm)) return RunMechanism(algorithm, inst, flags);
  return RunAlgorithm(algorithm, inst, flags);
}

int Sweep(const std::string& mechanism, const GeneratorSpec& spec, int n_max,
          int count, bool incentives, const CommonFlags& flags) {
  AuditOptions options;
  options.mechanism = MechanismFlags(flags);
  options.exact = Exact(flags);
  options.seed = flags.seed;
  options.incentives = incentives;
  Output out(flags.out);
  const RatioSummary summary =
      MeasureRatio(mechanism, spec, n_max, count, flags.seed, options,
                   &out.stream(), flags.decimals);
  std::ostream& log = out.to_file() ? std::cout : std::cerr;
  const MechanismInfo& info = FindMechanismInfo(mechanism);
  log << mechanism << " on " << summary.instances << ' ' << spec.family
      << " instances: worst ratio ";
  if (summary.infinite) log << "inf";
  else if (summary.worst) log << ToString(*summary.worst) << " ~ " << ToDecimal(*summary.worst, 4);
  else log << "n/a";
  if (info.ratio_bound) log << " (bound " << SurdToString(*info.ratio_bound) << ")";
  log << ", " << summary.failures << " with failing checks\n";
  return summary.failures == 0 ? 0 : 1;
}

int Audit(const std::string& mechanism, const std::string& instance_path,
          const CommonFlags& flags) {
  const Instance inst = LoadInstance(instance_path);
  AuditOptions options;
  options.mechanism = MechanismFlags(flags);
  options.exact = Exact(flags);
  options.seed = flags.seed;
  const AuditReport report = AuditMechanism(mechanism, inst, options);
  std::ostringstream summary;
  summary << "audit " << mechanism << " on " << report.instance_digest
          << ": opt " << ToString(report.opt) << ", value "
          << ToString(report.value) << ", ratio "
          << (report.ratio ? ToString(*report.ratio) : "inf") << '\n';
  PrintChecks(report, summary);
  Output out(flags.out);
  if (out.to_file()) std::cout << summary.str();
  else std::cerr << summary.str();
  out.stream() << CsvHeader(flags.decimals) << '\n'
               << CsvRow(report, flags.decimals) << '\n';
  return report.all_passed() ? 0 : 1;
}

int Lp(const std::string& instance_path, bool round, bool dump,
       const CommonFlags& flags) {
  const Instance inst = LoadInstance(instance_path);
  const CutLpModel model = MakeCutLpModel(inst, inst.Affordable());
  Output out(flags.out);
  std::ostream& os = out.stream();
  if (dump) os << DumpLp(model);
  const LpSolution lp = SolveLp(model);
  os << "opt_f " << ToString(lp.objective) << '\n'
     << "x " << VectorToString(lp.x) << '\n'
     << "pivots " << lp.pivots << '\n';
  if (!round) return 0;
  const PipageResult rounded = PipageRound(model, lp.x);
  os << "F(x) " << ToString(QuadraticObjective(model, lp.x)) << '\n';
  for (const PipageStep& step : rounded.trace) {
    os << "  step " << step.first + 1;
    if (step.second >= 0) os << ',' << step.second + 1;
    os << " shift " << ToString(step.shift) << " F "
       << ToString(step.value_after) << '\n';
  }
  os << "rounded " << VectorToString(rounded.x) << '\n'
     << "F " << ToString(rounded.value) << '\n'
     << "fractional "
     << (rounded.fractional < 0 ? std::string("none")
                                : std::to_string(rounded.fractional + 1))
     << '\n';
  return 0;
}

int LocalSearch(const std::string& instance_path, bool verify,
                const CommonFlags& flags) {
  const Instance inst = LoadInstance(instance_path);
  const Rational eps = EpsOr(flags, Rational(1, 10));
  const LocalSearchResult result = ApproxLocalSearch(inst, eps);
  Output out(flags.out);
  std::ostream& os = out.stream();
  os << "local optimum " << result.set.ToString() << " value "
     << ToString(inst.Value(result.set)) << '\n'
     << "eps " << ToString(result.eps) << " moves " << result.iterations
     << " oracle queries " << result.oracle_queries << '\n';
  if (!verify) return 0;
  bool ok = true;
  const LocalOptimumCheck local = VerifyApproxLocalOpt(inst, result.set, eps);
  os << "approximate local optimum: " << (local.holds ? "pass" : "FAIL") << '\n';
  ok = ok && local.holds;
  if (sgn(eps) == 0) {
    for (AgentSet side : {result.set, inst.agents() - result.set}) {
      const MonotonicityWitness w = VerifyRestrictedMonotone(inst, side);
      os << "monotone on " << side.ToString() << ": "
         << (w.holds ? "pass" : "FAIL") << '\n';
      ok = ok && w.holds;
    }
  } else {
    const AgentSet better =
        inst.Value(result.set) >= inst.Value(inst.agents() - result.set)
            ? result.set
            : inst.agents() - result.set;
    const Rational opt_x = BruteOpt(inst, better).value;
    // A (1 + eps/n^2) local optimum is quasi-monotone at 4 eps.
    const QuasiMonotoneWitness w =
        VerifyQuasiMonotone(inst, better, 4 * eps, opt_x);
    os << "quasi-monotone on " << better.ToString() << ": "
       << (w.holds ? "pass" : "FAIL") << '\n';
    ok = ok && w.holds;
  }
  return ok ? 0 : 1;
}

}  // namespace bfm::cli
