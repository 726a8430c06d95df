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

#include <gtest/gtest.h>

#include <random>

#include "bfm/brute_force.h"
#include "bfm/generators.h"
#include "bfm/lp_pipage.h"
#include "bfm/structure.h"
#include "fixtures.h"

namespace bfm {
namespace {

using testing::Cut;
using testing::K3;
using testing::Q;
using testing::Set;

CutLpModel SingleEdge(const std::string& budget) {
  CutLpModel model;
  model.n = 2;
  model.weights = {0, 1, 1, 0};
  model.costs = {1, 1};
  model.budget = Q(budget);
  return model;
}

// Every constraint of the relaxation, checked exactly.
void ExpectFeasible(const CutLpModel& model, const LpSolution& lp) {
  Rational spent = 0;
  std::size_t k = 0;
  for (int i = 0; i < model.n; ++i) {
    const Rational& xi = lp.x[static_cast<std::size_t>(i)];
    EXPECT_GE(xi, 0);
    EXPECT_LE(xi, 1);
    if (model.fixed_zero.contains(i)) {
      EXPECT_EQ(xi, 0);
    }
    spent += model.costs[static_cast<std::size_t>(i)] * xi;
    for (int j = i + 1; j < model.n; ++j, ++k) {
      const Rational& xj = lp.x[static_cast<std::size_t>(j)];
      const Rational& z = lp.z[k];
      EXPECT_GE(z, 0);
      EXPECT_LE(z, 1);
      EXPECT_LE(z, xi + xj);
      EXPECT_LE(z, 2 - xi - xj);
    }
  }
  EXPECT_LE(spent, model.budget);
}

TEST(SolveLpTest, ZeroBudgetForcesZero) {
  const CutLpModel model = SingleEdge("0");
  const LpSolution lp = SolveLp(model);
  EXPECT_EQ(lp.objective, 0);
  EXPECT_EQ(lp.x, (std::vector<Rational>{0, 0}));
}

TEST(SolveLpTest, SingleEdgeUnitBudget) {
  const CutLpModel model = SingleEdge("1");
  const LpSolution lp = SolveLp(model);
  EXPECT_EQ(lp.objective, 1);
  EXPECT_EQ(lp.x[0] + lp.x[1], 1);
  ExpectFeasible(model, lp);
}

TEST(SolveLpTest, TriangleRelaxationExceedsOptimum) {
  const Instance k3 = K3("3/2");
  const CutLpModel model = MakeCutLpModel(k3, k3.agents());
  const LpSolution lp = SolveLp(model);
  EXPECT_GE(lp.objective, BruteOpt(k3).value);
  EXPECT_EQ(lp.objective, 3);  // x = (1/2, 1/2, 1/2)
  ExpectFeasible(model, lp);
  EXPECT_FALSE(lp.basis.empty());
}

TEST(SolveLpTest, PivotCapIsEnforced) {
  const Instance k3 = K3("3/2");
  EXPECT_THROW(SolveLp(MakeCutLpModel(k3, k3.agents()), 0), PivotCapExceeded);
}

TEST(SolveLpTest, RequiresCutValuation) {
  EXPECT_THROW(MakeCutLpModel(testing::Additive({"1"}, {"1"}, "1"), Set({1})),
               std::invalid_argument);
}

TEST(OptFTest, Examples) {
  const Instance k3 = K3("1");
  EXPECT_EQ(OptF(k3, AgentSet()), 0);
  EXPECT_EQ(OptF(k3, Set({2})), k3.Value(Set({2})));
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const Instance inst =
        ErdosRenyiCut(6, 60, 5, 1, 6, Q("1/3"), rng);
    const AgentSet ground(rng() % 64);
    EXPECT_GE(OptF(inst, inst.Affordable(ground)),
              BruteOpt(inst, inst.Affordable(ground)).value);
  }
}

TEST(OptFTest, CacheAgreesWithSolver) {
  OptFCache cache;
  std::mt19937_64 rng(5);
  const Instance inst = ErdosRenyiCut(7, 50, 4, 1, 5, Q("1/3"), rng);
  for (std::uint64_t mask = 0; mask < 128; mask += 9) {
    const AgentSet ground = inst.Affordable(AgentSet(mask));
    EXPECT_EQ(cache.Value(inst, ground), OptF(inst, ground));
    EXPECT_EQ(cache.Value(inst, ground), OptF(inst, ground));
  }
  // Same oracle, different costs: a different entry.
  const std::size_t before = cache.size();
  std::vector<Rational> costs = inst.costs();
  costs[0] += 1;
  cache.Value(inst.WithCosts(costs), inst.Affordable());
  EXPECT_EQ(cache.size(), before + 1);
}

TEST(PipageTest, IntegralPointIsUnchanged) {
  const CutLpModel model = SingleEdge("1");
  const PipageResult r = PipageRound(model, {1, 0});
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.x, (std::vector<Rational>{1, 0}));
  EXPECT_EQ(r.fractional, -1);
  EXPECT_EQ(r.value, 1);
}

TEST(PipageTest, HalfHalfMovesToAnEndpoint) {
  const CutLpModel model = SingleEdge("1");
  const std::vector<Rational> half = {Q("1/2"), Q("1/2")};
  EXPECT_EQ(QuadraticObjective(model, half), Q("1/2"));
  EXPECT_EQ(LinearObjective(model, half), 1);
  const PipageResult r = PipageRound(model, half);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.x[0] + r.x[1], 1);
  EXPECT_TRUE(r.x[0] == 0 || r.x[0] == 1);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].value_after, 1);
}

TEST(PipageTest, ZeroCostCoordinateIsRoundedDirectly) {
  CutLpModel model = SingleEdge("1");
  model.costs = {0, 1};
  const PipageResult r = PipageRound(model, {Q("1/3"), 0});
  EXPECT_EQ(r.x, (std::vector<Rational>{1, 0}));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].second, -1);
}

TEST(PipageBoundTest, KnapsackStarsAndSingleEdge) {
  const Instance star = KnapsackToCut({Q("3"), Q("2")}, {Q("1"), Q("2")}, Q("2"));
  const PipageBoundReport report = VerifyPipageBound(star);
  EXPECT_TRUE(report.relaxation_holds);
  EXPECT_TRUE(report.beta_bound_holds);
  EXPECT_TRUE(report.four_bound_holds);
  EXPECT_TRUE(report.rounding_monotone);
  EXPECT_TRUE(report.at_most_one_fractional);
  EXPECT_TRUE(report.last_coordinate_bound);
  EXPECT_EQ(report.opt, 3);
  EXPECT_EQ(report.beta, 1);

  const Instance edge = Cut(2, {{1, 2}}, {"2"}, {"1", "1"}, "10");
  const PipageBoundReport single = VerifyPipageBound(edge);
  EXPECT_EQ(single.opt_f, single.opt);
  EXPECT_EQ(single.ratio, 1);
}

TEST(PipageBoundTest, QuadraticDominatesHalfTheLinearObjective) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    const Instance inst = ErdosRenyiCut(6, 50, 6, 1, 8, Q("1/3"), rng);
    const CutLpModel model = MakeCutLpModel(inst, inst.agents());
    for (int k = 0; k < 50; ++k) {
      const std::vector<Rational> x = RandomFractionalPoint(model, rng);
      Rational spent = 0;
      for (int i = 0; i < model.n; ++i) {
        EXPECT_GE(x[static_cast<std::size_t>(i)], 0);
        EXPECT_LE(x[static_cast<std::size_t>(i)], 1);
        spent += model.costs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      }
      EXPECT_LE(spent, model.budget);
      EXPECT_GE(2 * QuadraticObjective(model, x), LinearObjective(model, x));
    }
  }
}

TEST(DumpLpTest, ListsConstraints) {
  const std::string dump = DumpLp(SingleEdge("1"));
  EXPECT_NE(dump.find("maximize"), std::string::npos);
  EXPECT_NE(dump.find("<= 2"), std::string::npos);
  EXPECT_NE(dump.find("<= 1/1"), std::string::npos);
}

}  // namespace
}  // namespace bfm
