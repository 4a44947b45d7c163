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


#ifndef STRUCTEVAL_ZOO_TEMPLATES_H_
#define STRUCTEVAL_ZOO_TEMPLATES_H_

// Template extraction metrics: the MUC-4 overall score and the BETTER
// Granular product score.

#include <span>
#include <string>

#include "structeval/report.h"
#include "structeval/sim.h"
#include "structeval/zoo/config.h"
#include "structeval/zoo/records.h"

namespace structeval::zoo {

// 1 if equal, 0.5 if pred is a strict descendant of gold, else 0.
double PhiSet(const std::string& pred, const std::string& gold,
              const Ontology& ontology);

// Uppercased whitespace-separated words.
std::vector<std::string> Words(const std::string& text);

// 1 when some word that is not a premodifier occurs both in a predicted
// string and in a reference string.
double PhiStr(std::span<const std::string> pred,
              std::span<const std::string> gold, const DatasetConfig& cfg);

// delta_slot x phi_T, with phi_T chosen by the slot kind.
Similarity<SlotFiller> FillerSim(const DatasetConfig& cfg);
// delta_type x Sigma<->_fillers[FillerSim].
Similarity<Template> TemplateSim(const DatasetConfig& cfg);

MetricCounts Muc4(std::span<const Template> pred,
                  std::span<const Template> gold, const DatasetConfig& cfg,
                  EvalContext ctx = {});

// Two factors: template type F (over the slot-optimal alignment extended by
// a type matching of the remaining templates) and the slot-filler F.
MetricCounts BetterGranular(std::span<const Template> pred,
                            std::span<const Template> gold,
                            const DatasetConfig& cfg, EvalContext ctx = {});

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_TEMPLATES_H_
