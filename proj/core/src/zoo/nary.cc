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


#include "structeval/zoo/nary.h"

#include "structeval/matcher.h"
#include "structeval/zoo/coref.h"

namespace structeval::zoo {

Similarity<RoleFiller> ReeArgSim() {
  return Product<RoleFiller>(
      {Field(&RoleFiller::role, Discrete<std::string>()),
       Field(&RoleFiller::entity, PhiSubset())});
}

Similarity<RoleFiller> RolePhi3Sim() {
  return Product<RoleFiller>({Field(&RoleFiller::role, Discrete<std::string>()),
                              Field(&RoleFiller::entity, Phi3())});
}

std::vector<RoleFiller> ExplodeMentions(std::span<const RoleFiller> args) {
  std::vector<RoleFiller> out;
  for (const RoleFiller& a : args) {
    for (const Atom& m : a.entity) out.push_back({a.role, Entity{m}});
  }
  return out;
}

MetricCounts CeafRee(std::span<const RoleFiller> pred,
                     std::span<const RoleFiller> gold, EvalContext ctx) {
  return MetricCounts::Single(Overlap(pred, gold, ReeArgSim(),
                                      MatchConstraint::kOneToOne, ctx, "args"));
}

MetricCounts CeafRmeSubset(std::span<const RoleFiller> pred,
                           std::span<const RoleFiller> gold,
                           EvalContext ctx) {
  std::vector<RoleFiller> singles = ExplodeMentions(pred);
  return MetricCounts::Single(Overlap(std::span<const RoleFiller>(singles),
                                      gold, ReeArgSim(),
                                      MatchConstraint::kManyToOne, ctx,
                                      "args"));
}

MetricCounts CeafRmePhi3(std::span<const RoleFiller> pred,
                         std::span<const RoleFiller> gold, EvalContext ctx) {
  std::vector<RoleFiller> singles = ExplodeMentions(pred);
  return MetricCounts::Single(Overlap(std::span<const RoleFiller>(singles),
                                      gold, RolePhi3Sim(),
                                      MatchConstraint::kManyToOne, ctx,
                                      "args"));
}

Similarity<IndexMention> IndexMentionSim() {
  return Threshold(
      Field(&IndexMention::indices,
            SetMatch(Discrete<std::int64_t>(), MatchConstraint::kOneToOne,
                     Normalizer::kJaccard, "indices")),
      0.5, true);
}

Similarity<IndexRoleFiller> RoleFillerEntitySim() {
  return Threshold(
      Product<IndexRoleFiller>(
          {Field(&IndexRoleFiller::role, Discrete<std::string>()),
           Field(&IndexRoleFiller::mentions,
                 SetMatch(IndexMentionSim(), MatchConstraint::kOneToOne,
                          Normalizer::kPrecision, "mentions"))}),
      0.5, true);
}

Similarity<NAryRelation> NAryRelationSim() {
  // F is computed from equal integer counts, so a full match is exactly 1.
  return Threshold(Field(&NAryRelation::args,
                         SetMatch(RoleFillerEntitySim(),
                                  MatchConstraint::kOneToOne, Normalizer::kF,
                                  "args")),
                   1.0, false);
}

MetricCounts Scirex(std::span<const NAryRelation> pred,
                    std::span<const NAryRelation> gold, EvalContext ctx) {
  return MetricCounts::Single(Overlap(pred, gold, NAryRelationSim(),
                                      MatchConstraint::kOneToOne, ctx,
                                      "relations"));
}

}  // namespace structeval::zoo
