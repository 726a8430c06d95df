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
#include <string>

#include "bfm/audit.h"
#include "bfm/brute_force.h"
#include "bfm/frac_params.h"
#include "bfm/generators.h"
#include "bfm/mechanisms.h"
#include "bfm/payments.h"
#include "bfm/structure.h"
#include "fixtures.h"

namespace bfm {
namespace {

using testing::Additive;
using testing::K3;
using testing::Q;
using testing::Set;

Rational Expectation(Mechanism& mech) {
  return ExactExpectation(RunExact(mech, mech.instance().costs()));
}

TEST(ThresholdTest, ConfirmsRationalBreakpoint) {
  auto wins = [](const Rational& bid) { return bid <= Q("7/3"); };
  const Rational known = 1;
  const Threshold t = FindThreshold(0, wins, Q("4"), &known);
  EXPECT_EQ(t.value, Q("7/3"));
  EXPECT_TRUE(t.ever_wins);
}

TEST(ThresholdTest, NeverWinningAgentHasNoThreshold) {
  auto wins = [](const Rational&) { return false; };
  const Threshold t = FindThreshold(0, wins, Q("4"));
  EXPECT_FALSE(t.ever_wins);
}

TEST(ThresholdTest, DetectsNonMonotoneRule) {
  // Wins at 1 but not at 1/2.
  auto wins = [](const Rational& bid) {
    return bid <= Q("1/4") || (bid >= Q("3/4") && bid <= 1);
  };
  const Rational known = 1;
  EXPECT_THROW(FindThreshold(0, wins, Q("4"), &known), NonMonotoneDetected);
}

TEST(PaymentTest, GreedySingleAgentThresholdIsTwo) {
  const Instance one = Additive({"5"}, {"1"}, "4");
  auto mech = MakeMechanism("greedy-sm", one);
  const MechanismResult r = RunLeaf(*mech, one.costs(), mech->Leaves()[0]);
  EXPECT_EQ(r.winners, Set({1}));
  EXPECT_EQ(r.payments[0], 2);
}

TEST(PaymentTest, LosersAreNotPaid) {
  const Instance add = Additive({"6", "4", "1"}, {"2", "2", "1"}, "4");
  auto mech = MakeMechanism("greedy-sm", add);
  const MechanismResult r = RunLeaf(*mech, add.costs(), mech->Leaves()[0]);
  EXPECT_EQ(r.winners, Set({1}));
  EXPECT_EQ(r.payments[1], 0);
  EXPECT_EQ(r.payments[2], 0);
}

TEST(PaymentTest, GuardedItemIsPaidTheBudget) {
  const Instance star =
      KnapsackToCut({Q("100"), Q("1")}, {Q("1"), Q("1")}, Q("2"));
  auto mech = MakeMechanism("det-mech-ucut", star);
  const MechanismResult r = RunLeaf(*mech, star.costs(), mech->Leaves()[0]);
  EXPECT_EQ(r.branch, "returned i*");
  EXPECT_EQ(r.winners, Set({1}));
  EXPECT_EQ(r.payments[0], 2);
}

TEST(RandMechSmTest, AdditiveExample) {
  const Instance add = Additive({"6", "4", "1"}, {"2", "2", "1"}, "4");
  auto mech = MakeMechanism("rand-mech-sm", add);
  const RandomizedOutcome out = RunExact(*mech, add.costs());
  ASSERT_EQ(out.branches.size(), 2u);
  EXPECT_EQ(out.branches[0].probability, Q("2/5"));
  EXPECT_EQ(out.branches[0].result.value, 6);
  EXPECT_EQ(out.branches[1].result.value, 6);
  EXPECT_EQ(out.branches[0].result.payments[0], 4);  // paid B
  EXPECT_EQ(ExactExpectation(out), 6);
}

TEST(RandMechSmTest, NothingAffordable) {
  const Instance add = Additive({"6", "4"}, {"5", "7"}, "4");
  auto mech = MakeMechanism("rand-mech-sm", add);
  EXPECT_EQ(Expectation(*mech), 0);
}

TEST(MechSmTest, DominantItemIsReturned) {
  const Instance add = Additive({"100", "1", "1"}, {"1", "1", "1"}, "2");
  auto mech = MakeMechanism("mech-sm", add);
  const MechanismResult r = RunLeaf(*mech, add.costs(), mech->Leaves()[0]);
  EXPECT_EQ(r.branch, "returned i*");
  EXPECT_EQ(r.winners, Set({1}));
}

TEST(MechSmTest, GuardEqualityReturnsItem) {
  // With an irrational factor equality needs both sides to vanish.
  const Instance zero = Additive({"0", "0"}, {"1", "1"}, "2");
  std::string branch;
  EXPECT_EQ(MechSmAllocate(zero, zero.agents(), &branch), Set({1}));
  EXPECT_EQ(branch, "returned i*");
  // (2 + sqrt 6) 7 = 31.1: opt(A - i*) = 30 fires, 36 does not.
  const Instance fires = Additive({"7", "6", "6", "6", "6", "6"},
                                  {"1", "1", "1", "1", "1", "1"}, "6");
  EXPECT_EQ(MechSmAllocate(fires, fires.agents(), &branch), Set({1}));
  EXPECT_EQ(branch, "returned i*");
  const Instance fails = Additive({"7", "6", "6", "6", "6", "6", "6"},
                                  {"1", "1", "1", "1", "1", "1", "1"}, "7");
  MechSmAllocate(fails, fails.agents(), &branch);
  EXPECT_EQ(branch, "greedy");
}

TEST(MechSmFracTest, RhoOneMatchesMechSm) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    const Instance inst =
        TabularCoverage(3 + round % 5, 40, 6, 1, 6, Q("1/3"), rng);
    MechanismOptions options;
    options.rho = 1;
    options.opt_f = ExactOptProvider();
    auto frac = MakeMechanism("mech-sm-frac", inst, options);
    auto plain = MakeMechanism("mech-sm", inst);
    const RandomLeaf leaf = plain->Leaves()[0];
    EXPECT_EQ(frac->Allocate(inst.costs(), leaf, nullptr),
              plain->Allocate(inst.costs(), leaf, nullptr));
  }
}

TEST(MechSmFracVarTest, GammaOneMatchesAndSmallerGammaShrinks) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 40; ++round) {
    const Instance inst =
        TabularCoverage(3 + round % 5, 40, 6, 1, 6, Q("1/2"), rng);
    MechanismOptions one;
    one.gamma = 1;
    MechanismOptions half;
    half.gamma = Q("1/2");
    auto frac = MakeMechanism("mech-sm-frac", inst);
    auto var_one = MakeMechanism("mech-sm-frac-var", inst, one);
    auto var_half = MakeMechanism("mech-sm-frac-var", inst, half);
    const RandomLeaf leaf = frac->Leaves()[0];
    std::string tag_one;
    std::string tag_half;
    const AgentSet a = var_one->Allocate(inst.costs(), leaf, &tag_one);
    const AgentSet b = var_half->Allocate(inst.costs(), leaf, &tag_half);
    EXPECT_EQ(a, frac->Allocate(inst.costs(), leaf, nullptr));
    if (tag_one == "greedy" && tag_half == "greedy") {
      EXPECT_TRUE(b.IsSubsetOf(a));
    }
  }
  const Instance none = Additive({"3"}, {"5"}, "1");
  auto empty = MakeMechanism("mech-sm-frac-var", none);
  EXPECT_EQ(empty->Allocate(none.costs(), empty->Leaves()[0], nullptr),
            AgentSet());
}

TEST(SymSmTest, TriangleAndSingleAgent) {
  const Instance k3 = K3();
  for (const char* id : {"det-mech-symsm", "rand-mech-symsm"}) {
    auto mech = MakeMechanism(id, k3);
    // Greedy at B/2 admits nobody (1 > 1/2 * 2/2), so only the singleton
    // coin contributes to the randomized version.
    EXPECT_EQ(Expectation(*mech), id[0] == 'd' ? Q("2") : Q("4/5")) << id;
  }
  const Instance one = testing::Cut(2, {{1, 2}}, {"1"}, {"1", "9"}, "1");
  auto mech = MakeMechanism("det-mech-symsm", one);
  EXPECT_EQ(RunLeaf(*mech, one.costs(), mech->Leaves()[0]).winners, Set({1}));
}

TEST(RandMechUcutTest, TriangleLeavesAndIdentity) {
  const Instance k3 = K3();
  auto mech = MakeMechanism("rand-mech-ucut", k3);
  const RandomizedOutcome out = RunExact(*mech, k3.costs());
  ASSERT_EQ(out.branches.size(), 4u);
  for (const OutcomeBranch& b : out.branches) {
    const bool singleton = b.leaf.find("singleton") != std::string::npos;
    EXPECT_EQ(b.result.value, singleton ? 2 : 0) << b.leaf;
  }
  EXPECT_EQ(ExactExpectation(out), Q("4/5"));
  EXPECT_GE(ExactExpectation(out) * 10, BruteOpt(k3).value);
  // E = 3/10 v(X_S) + 2/10 v(i_S) + 3/10 v(X_A\S) + 2/10 v(i_A\S).
  Rational identity = 0;
  for (const OutcomeBranch& b : out.branches) {
    const bool singleton = b.leaf.find("singleton") != std::string::npos;
    identity += (singleton ? Q("2/10") : Q("3/10")) * b.result.value;
  }
  EXPECT_EQ(identity, ExactExpectation(out));
}

TEST(DetMechUcutTest, KnapsackStar) {
  const Instance star = KnapsackToCut({Q("3"), Q("2")}, {Q("1"), Q("2")}, Q("2"));
  const AuditReport report = AuditMechanism("det-mech-ucut", star);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.opt, 3);
  EXPECT_TRUE(WithinFactor(report.opt, Surd::FromRational(Q("109/4")),
                           report.value));
}

TEST(DetMechSymSmFracTest, SingleAgent) {
  const Instance one = testing::Cut(2, {{1, 2}}, {"1"}, {"1", "9"}, "1");
  for (const char* id : {"det-mech-symsm-frac", "det-mech-symsm-frac-tuned"}) {
    auto mech = MakeMechanism(id, one);
    EXPECT_EQ(RunLeaf(*mech, one.costs(), mech->Leaves()[0]).winners,
              Set({1}))
        << id;
  }
}

TEST(FracParamsTest, ConstantsForCutRelaxation) {
  const FracMechanismParams p = MakeFracParams(4, Q("1/200"));
  // inner_guard = 5 + sqrt 33, outer_guard = 29 + 5 sqrt 33 = 57.72...
  EXPECT_EQ(p.inner_guard.p, 5);
  EXPECT_EQ(p.inner_guard.d, 33);
  EXPECT_GT(SurdLowerBound(p.outer_guard, 40), Q("5772/100"));
  EXPECT_LT(SurdUpperBound(p.outer_guard, 40), Q("5773/100"));
  EXPECT_GE(p.outer_guard_upper, SurdUpperBound(p.outer_guard, 60));
  EXPECT_GT(p.gamma, 0);
  EXPECT_LT(p.gamma, 1);
  // The literal 58.72 is outer_guard + 1 truncated; the exact constant is a
  // hair above it.
  EXPECT_GT(SurdLowerBound(p.outer_guard, 40) + 1, Q("1468/25"));
  EXPECT_LT(p.outer_guard_upper + 1 + p.eps, Q("5873/100"));
}

TEST(SolveSearchEpsTest, Examples) {
  const int k = SolveSearchEps(1, 1);
  EXPECT_LE(k, 20);
  const Surd outer_guard = SingleItemFactor(1);
  const Rational outer_guard_hi = SurdUpperBound(outer_guard, 32);
  const Rational half = Q("1/2");
  EXPECT_TRUE(
      SearchEpsConditionHolds(1, outer_guard_hi, half, InversePowerOfTwo(k)));
  EXPECT_TRUE(
      SearchEpsConditionHolds(1, outer_guard_hi, half, InversePowerOfTwo(k + 1)));
  if (k > 1) {
    EXPECT_FALSE(
        SearchEpsConditionHolds(1, outer_guard_hi, half,
                                InversePowerOfTwo(k - 1)));
  }
  int previous = 0;
  for (const char* eps : {"1", "1/10", "1/100", "1/1000"}) {
    const int next = SolveSearchEps(1, Q(eps));
    EXPECT_GE(next, previous) << eps;
    previous = next;
  }
  EXPECT_GT(previous, k);
}

TEST(AdditiveMechanismTest, SingleItemAndLeaves) {
  const Instance one = Additive({"5"}, {"1"}, "2");
  auto mech = MakeMechanism("additive-mechanism", one);
  const RandomizedOutcome out = RunExact(*mech, one.costs());
  ASSERT_EQ(out.branches.size(), 2u);
  EXPECT_EQ(out.branches[0].probability, Q("1/3"));
  EXPECT_EQ(out.branches[1].probability, Q("2/3"));
  EXPECT_EQ(ExactExpectation(out), 5);
  for (const OutcomeBranch& b : out.branches) {
    EXPECT_EQ(b.result.winners, Set({1}));
    EXPECT_EQ(b.result.payments[0], 2);
  }
}

TEST(ProportionalShareTest, AcceptsPrefixUnderShareRule) {
  // Densities 3, 2, 1: agent 2 needs 2 <= 4 * 4/10, which fails.
  const std::vector<Rational> values = {6, 4, 1};
  const std::vector<Rational> bids = {2, 2, 1};
  EXPECT_EQ(ProportionalShare(values, bids, 4, Set({1, 2, 3})), Set({1}));
  EXPECT_EQ(ProportionalShare(values, {1, 1, 1}, 4, Set({1, 2, 3})),
            Set({1, 2}));
}

TEST(MainXosTest, SingleAgent) {
  const Instance one = testing::Xos(1, {{"3"}, {"5"}}, {"1"}, "1");
  auto mech = MakeMechanism("main-xos", one);
  EXPECT_EQ(Expectation(*mech), Q("2/25") * 5 + Q("23/25") * Q("1/2") * 5);
}

TEST(MainXosTest, FullSampleLeavesNothing) {
  const Instance xos = testing::Xos(3, {{"1", "2", "3"}, {"3", "1", "0"}},
                                    {"1", "1", "1"}, "2");
  auto mech = MakeMechanism("main-xos", xos);
  for (const RandomLeaf& leaf : mech->Leaves()) {
    if (leaf.label.rfind("T={1,2,3}", 0) == 0) {
      EXPECT_EQ(mech->Allocate(xos.costs(), leaf, nullptr), AgentSet());
    }
  }
}

TEST(MainXosTest, OneClauseMatchesAdditive) {
  const Instance add = Additive({"4", "1", "3"}, {"1", "2", "1"}, "2");
  const Instance xos = testing::Xos(3, {{"4", "1", "3"}}, {"1", "2", "1"}, "2");
  auto a = MakeMechanism("main-xos", add);
  auto b = MakeMechanism("main-xos", xos);
  const RandomizedOutcome ra = RunExact(*a, add.costs());
  const RandomizedOutcome rb = RunExact(*b, xos.costs());
  ASSERT_EQ(ra.branches.size(), rb.branches.size());
  for (std::size_t k = 0; k < ra.branches.size(); ++k) {
    EXPECT_EQ(ra.branches[k].result.winners, rb.branches[k].result.winners);
    EXPECT_EQ(ra.branches[k].result.payments, rb.branches[k].result.payments);
  }
}

TEST(CatalogTest, EveryMechanismHasADistribution) {
  std::mt19937_64 rng(31);
  const Instance cut = ErdosRenyiCut(4, 60, 3, 1, 5, Q("1/3"), rng);
  const Instance xos = RandomXos(4, 2, 5, 1, 5, Q("1/3"), rng);
  for (const MechanismInfo& info : MechanismCatalog()) {
    const bool needs_xos =
        info.id == "main-xos" || info.id == "additive-mechanism";
    const Instance& inst =
        needs_xos ? (info.id == "main-xos" ? xos
                                           : RandomAdditive(4, 5, 1, 5, Q("1/3"), rng))
                  : cut;
    auto mech = MakeMechanism(info.id, inst);
    Rational total = 0;
    for (const RandomLeaf& leaf : mech->Leaves()) total += leaf.probability;
    EXPECT_EQ(total, 1) << info.id;
    EXPECT_EQ(mech->Leaves().size() > 1, info.randomized) << info.id;
  }
  EXPECT_THROW(MakeMechanism("nope", cut), std::invalid_argument);
  EXPECT_THROW(MakeMechanism("main-xos", cut), std::invalid_argument);
}

TEST(SampledModeTest, SeedDeterminesLeaf) {
  const Instance k3 = K3();
  auto mech = MakeMechanism("rand-mech-ucut", k3);
  const RandomizedOutcome a = RunSampled(*mech, k3.costs(), 99);
  const RandomizedOutcome b = RunSampled(*mech, k3.costs(), 99);
  ASSERT_EQ(a.branches.size(), 1u);
  EXPECT_EQ(a.branches[0].leaf, b.branches[0].leaf);
  EXPECT_EQ(a.branches[0].probability, 1);
}

}  // namespace
}  // namespace bfm
