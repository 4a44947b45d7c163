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


#include "structeval/zoo/basic.h"

#include "structeval/matcher.h"

namespace structeval::zoo {

Similarity<Mention> MentionSim() {
  return Product<Mention>({Field(&Mention::left, Discrete<std::int64_t>()),
                           Field(&Mention::right, Discrete<std::int64_t>())});
}

Similarity<Relation> RelationSim() {
  return Product<Relation>({Field(&Relation::type, Discrete<std::string>()),
                            Field(&Relation::subj, MentionSim()),
                            Field(&Relation::obj, MentionSim())});
}

Similarity<DependencyEdge> UnlabeledEdgeSim() {
  return Product<DependencyEdge>(
      {Field(&DependencyEdge::gov, Discrete<std::int64_t>()),
       Field(&DependencyEdge::dep, Discrete<std::int64_t>())});
}

Similarity<DependencyEdge> LabeledEdgeSim() {
  return Product<DependencyEdge>(
      {UnlabeledEdgeSim(),
       Field(&DependencyEdge::rel, Discrete<std::string>())});
}

namespace {

Similarity<Trigger> TriggerRecordSim() {
  return Product<Trigger>({Field(&Trigger::mention, MentionSim()),
                           Field(&Trigger::type, Discrete<std::string>())});
}

template <typename T>
MetricCounts OverlapCounts(std::span<const T> pred, std::span<const T> gold,
                           const Similarity<T>& sim, EvalContext ctx,
                           const char* level) {
  MetricCounts c = MetricCounts::Single(
      Overlap(pred, gold, sim, MatchConstraint::kOneToOne, ctx, level));
  return c;
}

}  // namespace

Similarity<Event> TriggerSim() {
  return Field(&Event::trig, TriggerRecordSim());
}

Similarity<Argument> ArgumentSim() {
  return Product<Argument>({Field(&Argument::mention, MentionSim()),
                            Field(&Argument::role, Discrete<std::string>())});
}

Similarity<Event> EventArgumentSim() {
  return Product<Event>(
      {TriggerSim(),
       Field(&Event::args, SetMatch(ArgumentSim(), MatchConstraint::kOneToOne,
                                    std::nullopt, "arguments"))});
}

MetricCounts RelF1(std::span<const Relation> pred,
                   std::span<const Relation> gold, EvalContext ctx) {
  return OverlapCounts(pred, gold, RelationSim(), ctx, "relations");
}

MetricCounts Uas(std::span<const DependencyEdge> pred,
                 std::span<const DependencyEdge> gold, EvalContext ctx) {
  return OverlapCounts(pred, gold, UnlabeledEdgeSim(), ctx, "edges");
}

MetricCounts Las(std::span<const DependencyEdge> pred,
                 std::span<const DependencyEdge> gold, EvalContext ctx) {
  return OverlapCounts(pred, gold, LabeledEdgeSim(), ctx, "edges");
}

MetricCounts TrigF1(std::span<const Event> pred, std::span<const Event> gold,
                    EvalContext ctx) {
  return OverlapCounts(pred, gold, TriggerSim(), ctx, "events");
}

MetricCounts ArgF1(std::span<const Event> pred, std::span<const Event> gold,
                   EvalContext ctx) {
  return OverlapCounts(pred, gold, EventArgumentSim(), ctx, "events");
}

}  // namespace structeval::zoo
