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


#ifndef STRUCTEVAL_ZOO_BASIC_H_
#define STRUCTEVAL_ZOO_BASIC_H_

// Relation extraction, dependency attachment and event extraction metrics.

#include <span>

#include "structeval/report.h"
#include "structeval/sim.h"
#include "structeval/zoo/records.h"

namespace structeval::zoo {

Similarity<Mention> MentionSim();
Similarity<Relation> RelationSim();
Similarity<DependencyEdge> UnlabeledEdgeSim();
Similarity<DependencyEdge> LabeledEdgeSim();
Similarity<Event> TriggerSim();
Similarity<Argument> ArgumentSim();
// delta_trig x Sigma<->_args[delta_Argument].
Similarity<Event> EventArgumentSim();

MetricCounts RelF1(std::span<const Relation> pred,
                   std::span<const Relation> gold, EvalContext ctx = {});
MetricCounts Uas(std::span<const DependencyEdge> pred,
                 std::span<const DependencyEdge> gold, EvalContext ctx = {});
MetricCounts Las(std::span<const DependencyEdge> pred,
                 std::span<const DependencyEdge> gold, EvalContext ctx = {});
MetricCounts TrigF1(std::span<const Event> pred, std::span<const Event> gold,
                    EvalContext ctx = {});
MetricCounts ArgF1(std::span<const Event> pred, std::span<const Event> gold,
                   EvalContext ctx = {});

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_BASIC_H_
