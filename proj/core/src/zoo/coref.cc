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


#include "structeval/zoo/coref.h"

#include <algorithm>
#include <set>

#include "structeval/errors.h"
#include "structeval/matcher.h"

namespace structeval::zoo {

Similarity<Entity> Phi3() {
  return SetMatch(Discrete<Atom>(), MatchConstraint::kOneToOne, std::nullopt,
                  "mentions");
}

Similarity<Entity> Phi4() {
  return SetMatch(Discrete<Atom>(), MatchConstraint::kOneToOne, Normalizer::kF,
                  "mentions");
}

Similarity<Entity> PhiSubset() {
  return Threshold(SetMatch(Discrete<Atom>(), MatchConstraint::kOneToOne,
                            Normalizer::kPrecision, "mentions"),
                   1.0, false);
}

Similarity<Entity> PhiLink() {
  Similarity<Entity> phi3 = Phi3();
  return Similarity<Entity>(
      [phi3](const Entity& a, const Entity& b, EvalContext ctx) {
        return std::max(0.0, phi3.Value(a, b, ctx) - 1.0);
      },
      false);
}

void CheckDisjoint(std::span<const Entity> entities) {
  std::set<Atom> seen;
  for (const Entity& e : entities) {
    for (const Atom& m : e) {
      if (!seen.insert(m).second) {
        throw DataError("mention " + m.ToString() +
                        " appears in more than one entity");
      }
    }
  }
}

MetricCounts CeafPhi3(std::span<const Entity> pred,
                      std::span<const Entity> gold, EvalContext ctx) {
  return MetricCounts::Single(
      Overlap(pred, gold, Phi3(), MatchConstraint::kOneToOne, ctx, "entities"));
}

MetricCounts CeafPhi4(std::span<const Entity> pred,
                      std::span<const Entity> gold, EvalContext ctx) {
  return MetricCounts::Single(
      Overlap(pred, gold, Phi4(), MatchConstraint::kOneToOne, ctx, "entities"));
}

MetricCounts Muc(std::span<const Entity> pred, std::span<const Entity> gold,
                 EvalContext ctx) {
  return MetricCounts::Single(Overlap(pred, gold, PhiLink(),
                                      MatchConstraint::kManyToMany, ctx,
                                      "entities"));
}

namespace {

// A mention paired with the entity containing it.
struct Membership {
  Atom mention;
  const Entity* entity = nullptr;
};

std::vector<Membership> Memberships(std::span<const Entity> entities) {
  std::vector<Membership> out;
  for (const Entity& e : entities) {
    for (const Atom& m : e) out.push_back({m, &e});
  }
  return out;
}

Similarity<Membership> MembershipSim(Normalizer n) {
  auto entity_sim = SetMatch(Discrete<Atom>(), MatchConstraint::kOneToOne, n,
                             "mentions");
  return Product<Membership>(
      {Field(&Membership::mention, Discrete<Atom>()),
       Project<Membership, Entity>(
           [](const Membership& m) -> const Entity& { return *m.entity; },
           entity_sim)});
}

}  // namespace

MetricCounts B3(std::span<const Entity> pred, std::span<const Entity> gold,
                EvalContext ctx) {
  std::vector<Membership> p = Memberships(pred);
  std::vector<Membership> g = Memberships(gold);
  std::span<const Membership> sp(p), sg(g);
  OverlapTriple prec = Overlap(sp, sg, MembershipSim(Normalizer::kPrecision),
                               MatchConstraint::kOneToOne, ctx, "mentions");
  OverlapTriple rec = Overlap(sp, sg, MembershipSim(Normalizer::kRecall),
                              MatchConstraint::kOneToOne, ctx.Quiet());
  MetricCounts c;
  c.factors.push_back(
      {prec.sigma_pr, rec.sigma_pr, prec.sigma_pp, rec.sigma_rr});
  c.jaccard = false;
  return c;
}

}  // namespace structeval::zoo
