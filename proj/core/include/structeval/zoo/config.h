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


#ifndef STRUCTEVAL_ZOO_CONFIG_H_
#define STRUCTEVAL_ZOO_CONFIG_H_

// Per-dataset configuration: label sets, a type ontology, premodifier words
// and slot kinds for template metrics.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "structeval/zoo/json_reader.h"

namespace structeval::zoo {

// A forest of subtype edges over labels.
class Ontology {
 public:
  Ontology() = default;
  // Throws ConfigError when a label gets two parents or an edge closes a
  // cycle.
  explicit Ontology(const std::vector<std::pair<std::string, std::string>>&
                        child_parent_edges);

  bool Contains(const std::string& label) const {
    return labels_.count(label) != 0;
  }
  // The label followed by its ancestors, nearest first.
  std::vector<std::string> Ancestors(const std::string& label) const;
  // a <: b with a != b.
  bool IsStrictDescendant(const std::string& a, const std::string& b) const;
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }
  bool empty() const { return labels_.empty(); }

 private:
  std::map<std::string, std::string> parent_;
  std::set<std::string> labels_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

enum class SlotKind { kSet, kString };

struct DatasetConfig {
  // Category name -> allowed labels. Categories used by the zoo:
  // "relation", "dependency", "event", "role", "template", "slot", "amr".
  std::map<std::string, std::set<std::string>> labels;
  Ontology ontology;
  std::set<std::string> premodifiers;  // compared after uppercasing
  std::map<std::string, SlotKind> slots;

  // Throws DataError when `category` is declared and `label` is not in it.
  void CheckLabel(const std::string& category, const std::string& label,
                  const std::string& path) const;
  // Undeclared slots are string-fill.
  SlotKind KindOf(const std::string& slot) const;
};

// Throws ConfigError with a JSON path on malformed input.
DatasetConfig ParseDatasetConfig(const Json& j);
Ontology ParseOntology(const Json& j, const std::string& path);

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_CONFIG_H_
