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


#ifndef STRUCTEVAL_ZOO_COREF_H_
#define STRUCTEVAL_ZOO_COREF_H_

// Coreference metrics over entity sets.

#include <span>

#include "structeval/report.h"
#include "structeval/sim.h"
#include "structeval/zoo/records.h"

namespace structeval::zoo {

// Shared mention count (unnormalized).
Similarity<Entity> Phi3();
// F-normalized shared mention count.
Similarity<Entity> Phi4();
// [P subset-of R], with no credit for an empty prediction.
Similarity<Entity> PhiSubset();
// max(0, |X n Y| - 1): shared coreference links.
Similarity<Entity> PhiLink();

// Throws DataError when a mention appears in two entities of one side.
void CheckDisjoint(std::span<const Entity> entities);

MetricCounts CeafPhi3(std::span<const Entity> pred,
                      std::span<const Entity> gold, EvalContext ctx = {});
MetricCounts CeafPhi4(std::span<const Entity> pred,
                      std::span<const Entity> gold, EvalContext ctx = {});
MetricCounts Muc(std::span<const Entity> pred, std::span<const Entity> gold,
                 EvalContext ctx = {});
// Mention-level scores with uniform weights; J is not defined.
MetricCounts B3(std::span<const Entity> pred, std::span<const Entity> gold,
                EvalContext ctx = {});

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_COREF_H_
