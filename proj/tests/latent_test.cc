// Copyright 2026 The structeval Authors.
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


#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "generators.h"
#include "latent_instances.h"
#include "oracles.h"
#include "structeval/errors.h"
#include "structeval/latent.h"
#include "structeval/zoo/amr.h"
#include "structeval/zoo/records.h"

namespace structeval {
namespace {

constexpr double kTol = 1e-9;

using namespace latent_instances;  // NOLINT
using oracle::LatentItem;

TEST(LatentMatch, ExactAgreesWithEnumerationOneToOne) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    Instance in = RandomInstance(rng);
    double want = oracle::BruteLatent(in.pred, in.gold, in.pred_vars, in.gold_vars,
                                      oracle::Rule::kOneToOne);
    EXPECT_NEAR(Solve(in, MatchConstraint::kOneToOne, {}), want, kTol) << "instance " << i;
  }
}

TEST(LatentMatch, ExactAgreesWithEnumerationOtherConstraints) {
  std::mt19937_64 rng(78);
  const std::pair<MatchConstraint, oracle::Rule> cases[] = {
      {MatchConstraint::kManyToOne, oracle::Rule::kManyToOne},
      {MatchConstraint::kOneToMany, oracle::Rule::kOneToMany},
      {MatchConstraint::kManyToMany, oracle::Rule::kManyToMany}};
  for (int i = 0; i < 100; ++i) {
    Instance in = RandomInstance(rng);
    for (auto [c, rule] : cases) {
      double want = oracle::BruteLatent(in.pred, in.gold, in.pred_vars, in.gold_vars, rule);
      EXPECT_NEAR(Solve(in, c, {}), want, kTol) << ConstraintName(c) << " instance " << i;
    }
  }
}

TEST(LatentMatch, WitnessIsConsistent) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Instance in = RandomInstance(rng);
    std::span<const LatentItem> p(in.pred), g(in.gold);
    IlpInstance inst = BuildIlp(p, g, UpperSim(), Fields(in.arity), MatchConstraint::kOneToOne);
    IlpSolution sol = SolveIlp(inst, {});
    std::map<std::string, std::string> fwd, back;
    for (const auto& [x, y] : sol.alignment.pairs) {
      EXPECT_TRUE(fwd.emplace(x.name, y.name).second);
      EXPECT_TRUE(back.emplace(y.name, x.name).second);
    }
    double s = 0.0;
    std::set<int> rows, cols;
    for (auto [u, v] : sol.item_pairs) {
      EXPECT_TRUE(rows.insert(u).second);
      EXPECT_TRUE(cols.insert(v).second);
      const auto& a = in.pred[u];
      const auto& b = in.gold[v];
      for (std::size_t k = 0; k < a.slots.size(); ++k) {
        if (a.slots[k].var >= 0) {
          EXPECT_EQ(fwd["v" + std::to_string(a.slots[k].var)],
                    "v" + std::to_string(b.slots[k].var));
        }
      }
      s += UpperSim().Value(a, b);
    }
    EXPECT_NEAR(s, sol.score, kTol);
  }
}

TEST(LatentMatch, HillClimbIsAFeasibleLowerBound) {
  std::mt19937_64 rng(9);
  LatentOptions hc;
  hc.mode = SolverMode::kHillClimb;
  hc.seed = 42;
  for (int i = 0; i < 100; ++i) {
    Instance in = RandomInstance(rng);
    bool exact = true;
    double h = Solve(in, MatchConstraint::kOneToOne, hc, &exact);
    EXPECT_FALSE(exact);
    EXPECT_LE(h, Solve(in, MatchConstraint::kOneToOne, {}) + kTol);
    EXPECT_EQ(h, Solve(in, MatchConstraint::kOneToOne, hc));
  }
}

TEST(LatentMatch, NodeLimitRaisesResourceError) {
  std::mt19937_64 rng(1);
  LatentOptions tiny;
  tiny.node_limit = 1;
  bool thrown = false;
  for (int i = 0; i < 50 && !thrown; ++i) {
    Instance in = RandomInstance(rng);
    try {
      Solve(in, MatchConstraint::kOneToOne, tiny);
    } catch (const ResourceError&) {
      thrown = true;
    }
  }
  EXPECT_TRUE(thrown);
}

TEST(LatentMatch, ParsesSolverNames) {
  EXPECT_EQ(ParseSolverMode("exact"), SolverMode::kExact);
  EXPECT_EQ(ParseSolverMode("hillclimb"), SolverMode::kHillClimb);
  EXPECT_THROW(ParseSolverMode("greedy"), ConfigError);
}

zoo::Json Props(std::initializer_list<zoo::Json> ps) { return zoo::Json(ps); }

AmrGraph Read(const zoo::Json& j) {
  return zoo::ReadAmr(zoo::JsonCursor(j, "$"), zoo::DatasetConfig{});
}

TEST(Smatch, HandExample) {
  // (w / want :ARG0 (b / boy)) vs (w / want :ARG0 (g / girl)).
  zoo::Json pred = zoo::Json::parse(R"([
    {"rel": "instance", "subj": "a", "obj": {"concept": "want"}},
    {"rel": "instance", "subj": "b", "obj": {"concept": "boy"}},
    {"rel": "ARG0", "subj": "a", "obj": {"var": "b"}}])");
  zoo::Json gold = zoo::Json::parse(R"([
    {"rel": "instance", "subj": "x", "obj": {"concept": "want"}},
    {"rel": "instance", "subj": "y", "obj": {"concept": "girl"}},
    {"rel": "ARG0", "subj": "x", "obj": {"var": "y"}}])");
  SmatchResult r = Smatch(Read(pred), Read(gold));
  EXPECT_NEAR(r.triple.sigma_pr, 2.0, kTol);
  EXPECT_NEAR(r.f, 2.0 / 3.0, kTol);
  ASSERT_EQ(r.alignment.pairs.size(), 2u);
}

TEST(Smatch, RenamingInvariance) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    zoo::Json a = gen::Amr(rng, "x", 4);
    zoo::Json b = gen::RenameAmr(rng, a, "y");
    SmatchResult r = Smatch(Read(a), Read(b));
    EXPECT_NEAR(r.f, 1.0, kTol);
  }
}

TEST(Smatch, UndeclaredVariableIsDataError) {
  std::vector<Prop> props = {{"ARG0", VarId{"a"}, VarId{"b"}}};
  EXPECT_THROW(AmrGraph(props, {VarId{"a"}}), DataError);
}

}  // namespace
}  // namespace structeval
