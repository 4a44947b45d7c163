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


#ifndef STRUCTEVAL_ZOO_HIERARCHY_H_
#define STRUCTEVAL_ZOO_HIERARCHY_H_

// Type similarities that give partial credit along a type hierarchy.

#include <span>
#include <string>
#include <vector>

#include "structeval/sim.h"
#include "structeval/zoo/config.h"

namespace structeval::zoo {

// Labels from most general to most specific.
using TypePath = std::vector<std::string>;

// 2^(d - D) where d is the length of the longest common prefix, or 0 when
// d = 0. Throws ConfigError when the depths differ or are zero.
SimScore TypeSimilarityLevel(const TypePath& pred, const TypePath& gold);

// Every label in `labels` together with all of its ancestors. Throws
// DataError for labels missing from the ontology.
std::vector<std::string> Supertypes(std::span<const std::string> labels,
                                    const Ontology& ontology);

// F<->[delta] between the supertype closures.
SimScore TypeSimilaritySupertypes(std::span<const std::string> pred,
                                  std::span<const std::string> gold,
                                  const Ontology& ontology);

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_HIERARCHY_H_
