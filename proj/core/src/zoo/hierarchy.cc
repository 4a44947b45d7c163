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


#include "structeval/zoo/hierarchy.h"

#include <cmath>
#include <set>

#include "structeval/errors.h"
#include "structeval/matcher.h"

namespace structeval::zoo {

SimScore TypeSimilarityLevel(const TypePath& pred, const TypePath& gold) {
  if (pred.size() != gold.size()) {
    throw ConfigError("type paths have different depths (" +
                      std::to_string(pred.size()) + " vs " +
                      std::to_string(gold.size()) + ")");
  }
  if (pred.empty()) throw ConfigError("type paths must have depth >= 1");
  std::size_t d = 0;
  while (d < pred.size() && pred[d] == gold[d]) ++d;
  if (d == 0) return {0.0, true};
  return {std::ldexp(1.0, static_cast<int>(d) - static_cast<int>(pred.size())),
          true};
}

std::vector<std::string> Supertypes(std::span<const std::string> labels,
                                    const Ontology& ontology) {
  std::set<std::string> closed;
  for (const auto& l : labels) {
    if (!ontology.Contains(l)) {
      throw DataError("label '" + l + "' is not in the ontology");
    }
    for (auto& a : ontology.Ancestors(l)) closed.insert(std::move(a));
  }
  return {closed.begin(), closed.end()};
}

SimScore TypeSimilaritySupertypes(std::span<const std::string> pred,
                                  std::span<const std::string> gold,
                                  const Ontology& ontology) {
  std::vector<std::string> sp = Supertypes(pred, ontology);
  std::vector<std::string> sg = Supertypes(gold, ontology);
  return SetSimilarity(std::span<const std::string>(sp),
                       std::span<const std::string>(sg),
                       Discrete<std::string>(), MatchConstraint::kOneToOne,
                       Normalizer::kF);
}

}  // namespace structeval::zoo
