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

// bfm: generate instances, run algorithms and mechanisms, audit them.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bfm/rational.h"
#include "commands.h"

namespace {

std::vector<bfm::Rational> ParseList(const std::string& text) {
  std::vector<bfm::Rational> out;
  std::string item;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!item.empty()) out.push_back(bfm::ParseRational(item));
      item.clear();
    } else if (ch != ' ') {
      item += ch;
    }
  }
  return out;
}

struct GeneratorFlags {
  bfm::GeneratorSpec spec;
  std::string budget_fraction = "1/3";
  std::string values;
  std::string costs;
  std::string budget;

  void Register(CLI::App* app) {
    app->add_option("--family", spec.family,
                    "erdos-renyi-cut, star-knapsack, random-additive, "
                    "random-xos, tabular-symmetric or tabular-coverage")
        ->capture_default_str();
    app->add_option("--n", spec.n, "number of agents")->capture_default_str();
    app->add_option("--weight-max", spec.weight_max,
                    "largest edge weight or item value (1: unweighted)")
        ->capture_default_str();
    app->add_option("--cost-min", spec.cost_min)->capture_default_str();
    app->add_option("--cost-max", spec.cost_max)->capture_default_str();
    app->add_option("--edge-percent", spec.edge_percent)->capture_default_str();
    app->add_option("--clauses", spec.clauses, "XOS clauses")
        ->capture_default_str();
    app->add_option("--budget-fraction", budget_fraction,
                    "B as a fraction of the total cost")
        ->capture_default_str();
    app->add_option("--values", values,
                    "star-knapsack item values, comma separated");
    app->add_option("--costs", costs, "star-knapsack item costs");
    app->add_option("--budget", budget, "star-knapsack budget");
  }

  bfm::GeneratorSpec Resolve(std::uint64_t seed) const {
    bfm::GeneratorSpec out = spec;
    out.seed = seed;
    out.budget_fraction = bfm::ParseRational(budget_fraction);
    out.item_values = ParseList(values);
    out.item_costs = ParseList(costs);
    if (!budget.empty()) out.item_budget = bfm::ParseRational(budget);
    if (out.item_values.size() != out.item_costs.size()) {
      throw std::invalid_argument("--values and --costs differ in length");
    }
    return out;
  }
};

struct FlagStrings {
  std::string eps;
  std::string rho;
  std::string gamma;

  void Register(CLI::App* app, bfm::cli::CommonFlags& common) {
    app->add_option("--out", common.out, "output file (default: stdout)");
    app->add_option("--eps", eps, "accuracy parameter, e.g. 1/10");
    app->add_option("--rho", rho, "relaxation gap override");
    app->add_option("--gamma", gamma, "budget fraction of mech-sm-frac-var");
    app->add_option("--mode", common.mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
    app->add_option("--seed", common.seed)->capture_default_str();
    app->add_option("--decimals", common.decimals,
                    "add a decimal ratio column with this many digits");
  }

  void Apply(bfm::cli::CommonFlags& common) const {
    if (!eps.empty()) common.eps = eps;
    if (!rho.empty()) common.rho = rho;
    if (!gamma.empty()) common.gamma = gamma;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-feasible procurement: algorithms, mechanisms, audits"};
  app.require_subcommand(1);
  bfm::cli::CommonFlags common;
  FlagStrings strings;
  GeneratorFlags generator;
  std::string target;
  std::string instance;

  CLI::App* generate = app.add_subcommand("generate", "write a seeded instance");
  generator.Register(generate);
  strings.Register(generate, common);

  CLI::App* run = app.add_subcommand(
      "run", "run an algorithm (ls-greedy, greedy-enum-sm) or a mechanism");
  run->add_option("algorithm", target)->required();
  run->add_option("instance", instance)->required();
  strings.Register(run, common);

  int count = 100;
  int n_max = 0;
  bool no_incentives = false;
  CLI::App* sweep =
      app.add_subcommand("sweep", "audit a mechanism on generated instances");
  sweep->add_option("mechanism", target)->required();
  sweep->add_option("--count", count)->capture_default_str();
  sweep->add_option("--n-max", n_max, "cycle n from --n up to this value");
  sweep->add_flag("--no-incentives", no_incentives,
                  "skip payment and truthfulness checks");
  generator.Register(sweep);
  strings.Register(sweep, common);

  CLI::App* audit =
      app.add_subcommand("audit", "audit a mechanism on one instance");
  audit->add_option("mechanism", target)->required();
  audit->add_option("instance", instance)->required();
  strings.Register(audit, common);

  bool round = false;
  bool dump = false;
  CLI::App* lp = app.add_subcommand("lp", "solve (and round) the cut LP");
  lp->add_option("instance", instance)->required();
  lp->add_flag("--round", round, "apply pipage rounding");
  lp->add_flag("--dump", dump, "print the model");
  strings.Register(lp, common);

  bool verify = false;
  CLI::App* local = app.add_subcommand("localsearch", "approximate local search");
  local->add_option("instance", instance)->required();
  local->add_flag("--verify", verify, "check the properties of the result");
  strings.Register(local, common);

  CLI11_PARSE(app, argc, argv);
  try {
    strings.Apply(common);
    if (*generate) {
      return bfm::cli::Generate(generator.Resolve(common.seed), common);
    }
    if (*run) return bfm::cli::Run(target, instance, common);
    if (*sweep) {
      return bfm::cli::Sweep(target, generator.Resolve(common.seed), n_max,
                             count, !no_incentives, common);
    }
    if (*audit) return bfm::cli::Audit(target, instance, common);
    if (*lp) return bfm::cli::Lp(instance, round, dump, common);
    if (*local) return bfm::cli::LocalSearch(instance, verify, common);
  } catch (const std::exception& e) {
    std::cerr << "bfm: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
