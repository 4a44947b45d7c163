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


#include "structeval/zoo/templates.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "structeval/matcher.h"

namespace structeval::zoo {

double PhiSet(const std::string& pred, const std::string& gold,
              const Ontology& ontology) {
  if (pred == gold) return 1.0;
  if (ontology.IsStrictDescendant(pred, gold)) return 0.5;
  return 0.0;
}

std::vector<std::string> Words(const std::string& text) {
  std::string upper = text;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  std::istringstream in(upper);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

double PhiStr(std::span<const std::string> pred,
              std::span<const std::string> gold, const DatasetConfig& cfg) {
  std::set<std::string> gold_words;
  for (const auto& s : gold) {
    for (auto& w : Words(s)) {
      if (!cfg.premodifiers.count(w)) gold_words.insert(std::move(w));
    }
  }
  for (const auto& s : pred) {
    for (const auto& w : Words(s)) {
      if (!cfg.premodifiers.count(w) && gold_words.count(w)) return 1.0;
    }
  }
  return 0.0;
}

Similarity<SlotFiller> FillerSim(const DatasetConfig& cfg) {
  auto value_sim = Similarity<SlotFiller>(
      [&cfg](const SlotFiller& a, const SlotFiller& b, EvalContext) {
        if (cfg.KindOf(a.slot) == SlotKind::kSet) {
          return PhiSet(a.values.front(), b.values.front(), cfg.ontology);
        }
        return PhiStr(a.values, b.values, cfg);
      },
      true);
  return Product<SlotFiller>(
      {Field(&SlotFiller::slot, Discrete<std::string>()), value_sim});
}

Similarity<Template> TemplateSim(const DatasetConfig& cfg) {
  return Product<Template>(
      {Field(&Template::type, Discrete<std::string>()),
       Field(&Template::fillers,
             SetMatch(FillerSim(cfg), MatchConstraint::kOneToOne,
                      std::nullopt, "fillers"))});
}

MetricCounts Muc4(std::span<const Template> pred,
                  std::span<const Template> gold, const DatasetConfig& cfg,
                  EvalContext ctx) {
  return MetricCounts::Single(Overlap(pred, gold, TemplateSim(cfg),
                                      MatchConstraint::kOneToOne, ctx,
                                      "templates"));
}

MetricCounts BetterGranular(std::span<const Template> pred,
                            std::span<const Template> gold,
                            const DatasetConfig& cfg, EvalContext ctx) {
  Similarity<Template> slot_sim = TemplateSim(cfg);
  WeightMatrix w = BuildWeights(pred, gold, slot_sim, ctx);
  Matching slots = MatchScore(w, MatchConstraint::kOneToOne);
  RecordWitness("templates", slots, w, pred, gold, slot_sim, ctx);

  // Extend the alignment with type matches among the unaligned templates.
  std::vector<char> pred_used(pred.size(), 0), gold_used(gold.size(), 0);
  double type_matches = 0.0;
  for (auto [u, v] : slots.pairs) {
    pred_used[u] = gold_used[v] = 1;
    if (pred[u].type == gold[v].type) type_matches += 1.0;
  }
  std::vector<int> rest_p, rest_g;
  for (std::size_t u = 0; u < pred.size(); ++u) {
    if (!pred_used[u]) rest_p.push_back(static_cast<int>(u));
  }
  for (std::size_t v = 0; v < gold.size(); ++v) {
    if (!gold_used[v]) rest_g.push_back(static_cast<int>(v));
  }
  WeightMatrix tw(static_cast<int>(rest_p.size()),
                  static_cast<int>(rest_g.size()));
  for (std::size_t a = 0; a < rest_p.size(); ++a) {
    for (std::size_t b = 0; b < rest_g.size(); ++b) {
      tw.set(static_cast<int>(a), static_cast<int>(b),
             pred[rest_p[a]].type == gold[rest_g[b]].type ? 1.0 : 0.0);
    }
  }
  type_matches += MatchScore(tw, MatchConstraint::kOneToOne).score;

  MetricCounts c;
  c.factors.push_back({type_matches, type_matches,
                       static_cast<double>(pred.size()),
                       static_cast<double>(gold.size())});
  c.factors.push_back(Tally::FromTriple(
      {slots.score, SelfScore(pred, slot_sim, ctx),
       SelfScore(gold, slot_sim, ctx)}));
  c.jaccard = false;
  return c;
}

}  // namespace structeval::zoo
