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


#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "generators.h"
#include "oracles.h"
#include "structeval/errors.h"
#include "structeval/zoo/basic.h"
#include "structeval/zoo/config.h"
#include "structeval/zoo/coref.h"
#include "structeval/zoo/hierarchy.h"
#include "structeval/zoo/nary.h"
#include "structeval/zoo/records.h"
#include "structeval/zoo/registry.h"
#include "structeval/zoo/templates.h"

namespace structeval::zoo {
namespace {

constexpr double kTol = 1e-9;

Json J(const char* text) { return Json::parse(text); }

MetricValues RunZoo(const std::string& name, const Json& pred, const Json& gold,
                    const DatasetConfig* cfg = nullptr) {
  const ZooMetric* m = FindZooMetric(name);
  EXPECT_NE(m, nullptr) << name;
  ZooContext zc{cfg, {}};
  return ValuesOf(m->evaluate(JsonCursor(pred, "$.pred"), JsonCursor(gold, "$.gold"), zc, {}));
}

void ExpectPrf(const MetricValues& v, double p, double r, double f) {
  EXPECT_NEAR(v.p, p, kTol);
  EXPECT_NEAR(v.r, r, kTol);
  EXPECT_NEAR(v.f, f, kTol);
}

std::vector<Entity> ToEntities(const oracle::Clustering& c) {
  std::vector<Entity> out;
  for (const auto& k : c) {
    Entity e;
    for (const auto& m : k) e.push_back(Atom(m));
    out.push_back(e);
  }
  return out;
}

// --- relation and dependency metrics -----------------------------------------

TEST(RelF1, OneOfTwoAgainstOneOfThree) {
  Json gold = J(R"([
    {"type": "WorkFor", "subj": [0, 1], "obj": [5, 6]},
    {"type": "LocatedIn", "subj": [5, 6], "obj": [9, 9]},
    {"type": "LiveIn", "subj": [0, 1], "obj": [9, 9]}])");
  Json pred = J(R"([
    {"type": "WorkFor", "subj": [0, 1], "obj": [5, 6]},
    {"type": "LiveIn", "subj": [0, 0], "obj": [9, 9]}])");
  ExpectPrf(RunZoo("rel_f1", pred, gold), 0.5, 1.0 / 3.0, 0.4);
}

TEST(RelF1, MatchesCountingOracle) {
  gen::Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto [pred, gold] = gen::Pair(rng, gen::Relations);
    auto key = [](const Json& r) { return r.dump(); };
    std::vector<std::string> pk, gk;
    for (const auto& r : pred) pk.push_back(key(r));
    for (const auto& r : gold) gk.push_back(key(r));
    auto o = oracle::CountF1(pk, gk);
    ExpectPrf(RunZoo("rel_f1", pred, gold), o.p, o.r, o.f);
  }
}

TEST(Attachment, UasIgnoresLabelsLasDoesNot) {
  Json gold = J(R"([{"gov": 2, "dep": 1, "rel": "nsubj"}, {"gov": 0, "dep": 2, "rel": "root"},
                    {"gov": 2, "dep": 3, "rel": "obj"}])");
  Json pred = J(R"([{"gov": 2, "dep": 1, "rel": "obj"}, {"gov": 0, "dep": 2, "rel": "root"},
                    {"gov": 1, "dep": 3, "rel": "obj"}])");
  ExpectPrf(RunZoo("uas", pred, gold), 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0);
  ExpectPrf(RunZoo("las", pred, gold), 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
}

TEST(EventMetrics, TriggerAndArgumentCounts) {
  Json gold = J(R"([{"trig": {"mention": [3, 3], "type": "Attack"},
                      "args": [{"mention": [0, 1], "role": "agent"},
                               {"mention": [5, 5], "role": "place"}]}])");
  Json pred = J(R"([{"trig": {"mention": [3, 3], "type": "Attack"},
                      "args": [{"mention": [0, 1], "role": "agent"}]},
                     {"trig": {"mention": [7, 7], "type": "Move"},
                      "args": [{"mention": [8, 8], "role": "agent"}]}])");
  ExpectPrf(RunZoo("trig_f1", pred, gold), 0.5, 1.0, 2.0 / 3.0);
  ExpectPrf(RunZoo("arg_f1", pred, gold), 0.5, 0.5, 0.5);
}

TEST(EventMetrics, WrongTriggerVoidsArguments) {
  Json gold = J(R"([{"trig": {"mention": [3, 3], "type": "Attack"},
                      "args": [{"mention": [0, 1], "role": "agent"}]}])");
  Json pred = J(R"([{"trig": {"mention": [3, 3], "type": "Move"},
                      "args": [{"mention": [0, 1], "role": "agent"}]}])");
  ExpectPrf(RunZoo("arg_f1", pred, gold), 0.0, 0.0, 0.0);
}

// --- coreference --------------------------------------------------------------

TEST(Coref, CeafPhi4HandCase) {
  oracle::Clustering pred = {{"a", "b"}, {"c"}}, gold = {{"a", "b", "c"}};
  MetricValues v = ValuesOf(CeafPhi4(ToEntities(pred), ToEntities(gold)));
  ExpectPrf(v, 0.4, 0.8, 8.0 / 15.0);
  auto o = oracle::CeafPhi4(pred, gold);
  ExpectPrf(v, o.p, o.r, o.f);
}

TEST(Coref, MucHandCase) {
  oracle::Clustering pred = {{"a", "b"}, {"c"}}, gold = {{"a", "b", "c"}};
  MetricValues v = ValuesOf(Muc(ToEntities(pred), ToEntities(gold)));
  ExpectPrf(v, 1.0, 0.5, 2.0 / 3.0);
  auto o = oracle::Muc(pred, gold);
  ExpectPrf(v, o.p, o.r, o.f);
}

TEST(Coref, B3HandCase) {
  oracle::Clustering pred = {{"a", "b"}, {"c", "d"}}, gold = {{"a", "b", "c"}, {"d"}};
  MetricValues v = ValuesOf(B3(ToEntities(pred), ToEntities(gold)));
  EXPECT_NEAR(v.p, 0.75, kTol);
  EXPECT_NEAR(v.r, 2.0 / 3.0, kTol);
  EXPECT_FALSE(v.j.has_value());
  auto o = oracle::B3(pred, gold);
  ExpectPrf(v, o.p, o.r, o.f);
}

TEST(Coref, RandomAgainstDirectFormulas) {
  gen::Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    auto pred = gen::Clusters(rng), gold = gen::Clusters(rng);
    auto pe = ToEntities(pred), ge = ToEntities(gold);
    auto check = [&](const MetricValues& v, const oracle::Prf& o, const char* what) {
      EXPECT_NEAR(v.p, o.p, kTol) << what << " case " << i;
      EXPECT_NEAR(v.r, o.r, kTol) << what << " case " << i;
      EXPECT_NEAR(v.f, o.f, kTol) << what << " case " << i;
    };
    if (pred.empty() || gold.empty()) continue;
    check(ValuesOf(Muc(pe, ge)), oracle::Muc(pred, gold), "muc");
    check(ValuesOf(B3(pe, ge)), oracle::B3(pred, gold), "b3");
    check(ValuesOf(CeafPhi4(pe, ge)), oracle::CeafPhi4(pred, gold), "ceaf4");
    check(ValuesOf(CeafPhi3(pe, ge)), oracle::CeafPhi3(pred, gold), "ceaf3");
  }
}

TEST(Coref, OverlappingEntitiesRejected) {
  Json bad = J(R"([["a", "b"], ["b"]])");
  Json ok = J(R"([["a"]])");
  EXPECT_THROW(RunZoo("muc", bad, ok), DataError);
}

TEST(Coref, PhiFamilies) {
  Entity ab = {Atom("a"), Atom("b")}, abc = {Atom("a"), Atom("b"), Atom("c")},
         ad = {Atom("a"), Atom("d")};
  EXPECT_EQ(Phi3().Value(ab, abc), 2.0);
  EXPECT_NEAR(Phi4().Value(ab, abc), 0.8, kTol);
  EXPECT_EQ(PhiSubset().Value(ab, abc), 1.0);
  EXPECT_EQ(PhiSubset().Value(ad, abc), 0.0);
  EXPECT_EQ(PhiLink().Value(ab, abc), 1.0);
  EXPECT_EQ(PhiLink().Value(ad, abc), 0.0);
}

// --- n-ary and role-filler metrics ---------------------------------------------

TEST(RoleFillers, ReeIsStrictRmeIsOneSided) {
  Json gold = J(R"([{"role": "perp", "entity": ["a", "b", "c"]},
                    {"role": "victim", "entity": ["d"]}])");
  Json pred = J(R"([{"role": "perp", "entity": ["a", "b"]},
                    {"role": "victim", "entity": ["d", "e"]}])");
  // REE: the perp subset counts, the victim superset does not.
  ExpectPrf(RunZoo("ceaf_ree", pred, gold), 0.5, 0.5, 0.5);
  // RME-subset: mentions a, b, d match; e does not.
  MetricValues v = RunZoo("ceaf_rme_subset", pred, gold);
  EXPECT_NEAR(v.p, 0.75, kTol);
  // RME-phi3 denominators: 4 predicted mentions and 4 gold mentions.
  MetricValues w = RunZoo("ceaf_rme_phi3", pred, gold);
  EXPECT_NEAR(w.p, 0.75, kTol);
  EXPECT_NEAR(w.r, 0.75, kTol);
}

TEST(Scirex, ThresholdsAtEveryLevel) {
  Json gold = J(R"([{"type": "R", "args": [
      {"role": "dataset", "entity": [{"indices": [1, 2]}]},
      {"role": "metric", "entity": [{"indices": [4]}]},
      {"role": "task", "entity": [{"indices": [6, 7, 8]}]},
      {"role": "method", "entity": [{"indices": [10]}]}]}])");
  Json close = J(R"([{"type": "R", "args": [
      {"role": "dataset", "entity": [{"indices": [1, 2, 3]}]},
      {"role": "metric", "entity": [{"indices": [4]}]},
      {"role": "task", "entity": [{"indices": [6, 7]}]},
      {"role": "method", "entity": [{"indices": [10]}]}]}])");
  ExpectPrf(RunZoo("scirex", close, gold), 1.0, 1.0, 1.0);
  Json half = J(R"([{"type": "R", "args": [
      {"role": "dataset", "entity": [{"indices": [1, 3]}]},
      {"role": "metric", "entity": [{"indices": [4]}]},
      {"role": "task", "entity": [{"indices": [6, 7]}]},
      {"role": "method", "entity": [{"indices": [10]}]}]}])");
  // Jaccard({1,3},{1,2}) = 1/3 is not above one half, so the relation fails.
  ExpectPrf(RunZoo("scirex", half, gold), 0.0, 0.0, 0.0);
}

// --- templates -----------------------------------------------------------------

DatasetConfig TemplateConfig() {
  return ParseDatasetConfig(J(R"({
    "ontology": {"edges": [["bombing", "attack"], ["arson", "attack"]]},
    "premodifiers": ["the", "a", "armed"],
    "slots": {"incident": "set", "perp": "string", "target": "string"}})"));
}

TEST(PhiSet, EqualSubtypeUnrelated) {
  DatasetConfig cfg = TemplateConfig();
  EXPECT_EQ(PhiSet("attack", "attack", cfg.ontology), 1.0);
  EXPECT_EQ(PhiSet("bombing", "attack", cfg.ontology), 0.5);
  EXPECT_EQ(PhiSet("attack", "bombing", cfg.ontology), 0.0);
  EXPECT_EQ(PhiSet("bombing", "arson", cfg.ontology), 0.0);
}

TEST(PhiStr, SharedNonPremodifierWord) {
  DatasetConfig cfg = TemplateConfig();
  std::vector<std::string> p = {"the armed guerrillas"}, g = {"urban guerrillas"};
  std::vector<std::string> q = {"the armed men"};
  EXPECT_EQ(PhiStr(p, g, cfg), 1.0);
  EXPECT_EQ(PhiStr(q, g, cfg), 0.0);
  std::vector<std::string> only_pre = {"The"}, gold_pre = {"the bank"};
  EXPECT_EQ(PhiStr(only_pre, gold_pre, cfg), 0.0);
}

TEST(Muc4, AlignsTemplatesAndScoresFillers) {
  DatasetConfig cfg = TemplateConfig();
  Json gold = J(R"([{"type": "attack", "fillers": [
      {"slot": "incident", "value": "attack"},
      {"slot": "perp", "value": ["urban guerrillas", "FMLN"]},
      {"slot": "target", "value": "power tower"}]}])");
  Json pred = J(R"([{"type": "attack", "fillers": [
      {"slot": "incident", "value": "bombing"},
      {"slot": "perp", "value": "the guerrillas"}]}])");
  MetricValues v = RunZoo("muc4", pred, gold, &cfg);
  EXPECT_NEAR(v.p, 1.5 / 2.0, kTol);
  EXPECT_NEAR(v.r, 1.5 / 3.0, kTol);
}

TEST(BetterGranular, ProductOfTypeAndSlotScores) {
  DatasetConfig cfg = TemplateConfig();
  Json gold = J(R"([{"type": "attack", "fillers": [{"slot": "perp", "value": "guerrillas"}]},
                    {"type": "arson", "fillers": [{"slot": "target", "value": "bank"}]}])");
  Json pred = J(R"([{"type": "attack", "fillers": [{"slot": "perp", "value": "guerrillas"},
                                                   {"slot": "target", "value": "bank"}]}])");
  MetricValues v = RunZoo("better_granular", pred, gold, &cfg);
  // Type: P 1/1, R 1/2. Slots: 1 of 2 predicted, 1 of 2 gold.
  EXPECT_NEAR(v.p, 1.0 * 0.5, kTol);
  EXPECT_NEAR(v.r, 0.5 * 0.5, kTol);
  EXPECT_NEAR(v.f, (2.0 / 3.0) * 0.5, kTol);
}

// --- hierarchy -----------------------------------------------------------------

TEST(Hierarchy, LevelSimilarity) {
  EXPECT_EQ(TypeSimilarityLevel({"life", "die", "shoot"}, {"life", "die", "shoot"}).value, 1.0);
  EXPECT_EQ(TypeSimilarityLevel({"life", "die", "shoot"}, {"life", "die", "poison"}).value, 0.5);
  EXPECT_EQ(TypeSimilarityLevel({"life", "die", "x"}, {"life", "injure", "x"}).value, 0.25);
  EXPECT_EQ(TypeSimilarityLevel({"a", "b"}, {"c", "b"}).value, 0.0);
  EXPECT_THROW(TypeSimilarityLevel({"a"}, {"a", "b"}), ConfigError);
}

TEST(Hierarchy, SupertypeF1) {
  Ontology o({{"shoot", "die"}, {"poison", "die"}, {"die", "life"}});
  std::vector<std::string> p = {"shoot"}, g = {"poison"};
  // {shoot, die, life} vs {poison, die, life}: 2 shared of 3 each.
  EXPECT_NEAR(TypeSimilaritySupertypes(p, g, o).value, 2.0 / 3.0, kTol);
  std::vector<std::string> unknown = {"fly"};
  EXPECT_THROW(TypeSimilaritySupertypes(unknown, g, o), DataError);
}

TEST(Config, RejectsMalformedOntologies) {
  EXPECT_THROW(Ontology({{"a", "b"}, {"a", "c"}}), ConfigError);
  EXPECT_THROW(Ontology({{"a", "b"}, {"b", "a"}}), ConfigError);
  EXPECT_THROW(ParseDatasetConfig(J(R"({"slots": {"x": "blob"}})")), ConfigError);
}

TEST(Config, LabelSetsAreEnforced) {
  DatasetConfig cfg = ParseDatasetConfig(J(R"({"labels": {"relation": ["WorkFor"]}})"));
  Json gold = J(R"([{"type": "WorkFor", "subj": [0, 0], "obj": [1, 1]}])");
  Json pred = J(R"([{"type": "Unknown", "subj": [0, 0], "obj": [1, 1]}])");
  EXPECT_THROW(RunZoo("rel_f1", pred, gold, &cfg), DataError);
}

TEST(Attachment, LabelOnlyErrorHalvesLas) {
  Json gold = J(R"([{"gov": 0, "dep": 1, "rel": "root"}, {"gov": 1, "dep": 2, "rel": "obj"}])");
  Json pred = J(R"([{"gov": 0, "dep": 1, "rel": "root"}, {"gov": 1, "dep": 2, "rel": "nsubj"}])");
  ExpectPrf(RunZoo("uas", pred, gold), 1.0, 1.0, 1.0);
  ExpectPrf(RunZoo("las", pred, gold), 0.5, 0.5, 0.5);
  Json disjoint = J(R"([{"gov": 3, "dep": 4, "rel": "root"}])");
  ExpectPrf(RunZoo("uas", disjoint, gold), 0.0, 0.0, 0.0);
}

TEST(EventMetrics, OneOfTwoArgumentsOnEachSide) {
  Json gold = J(R"([{"trig": {"mention": [3, 3], "type": "Attack"},
                      "args": [{"mention": [0, 1], "role": "agent"},
                               {"mention": [5, 5], "role": "place"}]}])");
  Json pred = J(R"([{"trig": {"mention": [3, 3], "type": "Attack"},
                      "args": [{"mention": [0, 1], "role": "agent"},
                               {"mention": [6, 6], "role": "place"}]}])");
  ExpectPrf(RunZoo("arg_f1", pred, gold), 0.5, 0.5, 0.5);
  ExpectPrf(RunZoo("trig_f1", pred, gold), 1.0, 1.0, 1.0);
}

TEST(RoleFillers, SubsetCreditAndOneSidedMatching) {
  Json gold = J(R"([{"role": "perp", "entity": ["m1", "m2"]}])");
  ExpectPrf(RunZoo("ceaf_ree", J(R"([{"role": "perp", "entity": ["m1"]}])"), gold),
            1.0, 1.0, 1.0);
  ExpectPrf(RunZoo("ceaf_ree", J(R"([{"role": "perp", "entity": ["m1", "m3"]}])"), gold),
            0.0, 0.0, 0.0);
  Json singles = J(R"([{"role": "perp", "entity": ["m1"]}, {"role": "perp", "entity": ["m2"]}])");
  EXPECT_EQ(CeafRmePhi3(ReadRoleFillers(JsonCursor(singles, "$"), {}),
                        ReadRoleFillers(JsonCursor(gold, "$"), {}))
                .factors[0]
                .matched_p,
            2.0);
}

TEST(Scirex, MentionJaccardAndArity) {
  auto rel = [](const char* dataset) {
    return J((std::string(R"([{"type": "R", "args": [
        {"role": "dataset", "entity": [{"indices": )") + dataset + R"(}]},
        {"role": "metric", "entity": [{"indices": [9]}]},
        {"role": "task", "entity": [{"indices": [10]}]},
        {"role": "method", "entity": [{"indices": [11]}]}]}])")
                  .c_str());
  };
  ExpectPrf(RunZoo("scirex", rel("[1, 2, 3, 4]"), rel("[2, 3, 4, 5]")), 1.0, 1.0, 1.0);
  ExpectPrf(RunZoo("scirex", rel("[1, 2]"), rel("[3, 4]")), 0.0, 0.0, 0.0);
  Json three = J(R"([{"type": "R", "args": [
      {"role": "dataset", "entity": [{"indices": [1]}]},
      {"role": "metric", "entity": [{"indices": [2]}]},
      {"role": "task", "entity": [{"indices": [3]}]}]}])");
  EXPECT_THROW(RunZoo("scirex", three, three), DataError);
}

TEST(Muc4, SubtypeFillerGivesHalfCredit) {
  DatasetConfig cfg = TemplateConfig();
  Json gold = J(R"([{"type": "attack", "fillers": [{"slot": "incident", "value": "attack"}]}])");
  Json pred = J(R"([{"type": "attack", "fillers": [{"slot": "incident", "value": "bombing"}]}])");
  ExpectPrf(RunZoo("muc4", pred, gold, &cfg), 0.5, 0.5, 0.5);
  Json wrong_kind = J(R"([{"type": "attack", "fillers": [{"slot": "incident", "value": ["x"]}]}])");
  EXPECT_THROW(RunZoo("muc4", wrong_kind, gold, &cfg), DataError);
}

// --- registry ------------------------------------------------------------------

TEST(Registry, EveryMetricScoresIdentityAsPerfect) {
  DatasetConfig cfg = TemplateConfig();
  std::map<std::string, Json> payload = {
      {"rel_f1", J(R"([{"type": "WorkFor", "subj": [0, 1], "obj": [3, 3]}])")},
      {"uas", J(R"([{"gov": 0, "dep": 1, "rel": "root"}])")},
      {"las", J(R"([{"gov": 0, "dep": 1, "rel": "root"}])")},
      {"trig_f1", J(R"([{"trig": {"mention": [1, 1], "type": "Attack"}, "args": []}])")},
      {"arg_f1", J(R"([{"trig": {"mention": [1, 1], "type": "Attack"},
                         "args": [{"mention": [0, 0], "role": "agent"}]}])")},
      {"muc", J(R"([["a", "b"], ["c"]])")},
      {"b3", J(R"([["a", "b"], ["c"]])")},
      {"ceaf_phi3", J(R"([["a", "b"], ["c"]])")},
      {"ceaf_phi4", J(R"([["a", "b"], ["c"]])")},
      {"ceaf_ree", J(R"([{"role": "perp", "entity": ["a"]}])")},
      {"ceaf_rme_subset", J(R"([{"role": "perp", "entity": ["a"]}])")},
      {"ceaf_rme_phi3", J(R"([{"role": "perp", "entity": ["a"]}])")},
      {"scirex", J(R"([{"type": "R", "args": [
          {"role": "dataset", "entity": [{"indices": [1]}]},
          {"role": "metric", "entity": [{"indices": [2]}]},
          {"role": "task", "entity": [{"indices": [3]}]},
          {"role": "method", "entity": [{"indices": [4]}]}]}])")},
      {"muc4", J(R"([{"type": "attack", "fillers": [{"slot": "perp", "value": "men"}]}])")},
      {"better_granular",
       J(R"([{"type": "attack", "fillers": [{"slot": "perp", "value": "men"}]}])")},
      {"smatch", J(R"([{"rel": "instance", "subj": "x", "obj": {"concept": "dog"}}])")},
      {"type_level", J(R"({"path": ["attack", "bombing"]})")},
      {"type_supertypes", J(R"({"labels": ["bombing"]})")},
  };
  ASSERT_EQ(ZooMetrics().size(), payload.size());
  for (const auto& m : ZooMetrics()) {
    ASSERT_TRUE(payload.count(m.name)) << m.name;
    const Json& p = payload[m.name];
    ExpectPrf(RunZoo(m.name, p, p, &cfg), 1.0, 1.0, 1.0);
    EXPECT_FALSE(m.summary.empty());
    EXPECT_FALSE(m.payload.empty());
  }
  EXPECT_EQ(FindZooMetric("nope"), nullptr);
}

TEST(Registry, EmptyDocumentsArePerfectAndMissingPredIsZero) {
  Json empty = Json::array();
  Json one = J(R"([{"gov": 0, "dep": 1, "rel": "root"}])");
  ExpectPrf(RunZoo("las", empty, empty), 1.0, 1.0, 1.0);
  ExpectPrf(RunZoo("las", empty, one), 0.0, 0.0, 0.0);
}

TEST(Readers, ReportJsonPaths) {
  Json bad = J(R"([{"gov": 0, "dep": "one", "rel": "root"}])");
  try {
    RunZoo("las", bad, bad);
    FAIL() << "expected a data error";
  } catch (const DataError& e) {
    EXPECT_EQ(e.path(), "$.pred[0].dep");
  }
  Json inverted = J(R"([{"type": "T", "subj": [3, 1], "obj": [0, 0]}])");
  EXPECT_THROW(RunZoo("rel_f1", inverted, inverted), DataError);
}

}  // namespace
}  // namespace structeval::zoo
