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


#ifndef STRUCTEVAL_ZOO_NARY_H_
#define STRUCTEVAL_ZOO_NARY_H_

// Role-filler entity extraction and n-ary relation metrics.

#include <span>

#include "structeval/report.h"
#include "structeval/sim.h"
#include "structeval/zoo/records.h"

namespace structeval::zoo {

// delta_role x phi_subset.
Similarity<RoleFiller> ReeArgSim();
// delta_role x phi3.
Similarity<RoleFiller> RolePhi3Sim();

// Splits every predicted entity into singleton entities with the same role.
std::vector<RoleFiller> ExplodeMentions(std::span<const RoleFiller> args);

MetricCounts CeafRee(std::span<const RoleFiller> pred,
                     std::span<const RoleFiller> gold, EvalContext ctx = {});
// One-sided variants; predicted mentions become singleton entities.
MetricCounts CeafRmeSubset(std::span<const RoleFiller> pred,
                           std::span<const RoleFiller> gold,
                           EvalContext ctx = {});
MetricCounts CeafRmePhi3(std::span<const RoleFiller> pred,
                         std::span<const RoleFiller> gold,
                         EvalContext ctx = {});

// [J(indices) > 0.5].
Similarity<IndexMention> IndexMentionSim();
// [delta_role x P<->_mentions[phi_mention] > 0.5].
Similarity<IndexRoleFiller> RoleFillerEntitySim();
// [F<->_args[phi_RFE] = 1].
Similarity<NAryRelation> NAryRelationSim();

MetricCounts Scirex(std::span<const NAryRelation> pred,
                    std::span<const NAryRelation> gold, EvalContext ctx = {});

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_NARY_H_
