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


#include "structeval/zoo/config.h"

#include <algorithm>
#include <cctype>

#include "structeval/errors.h"

namespace structeval::zoo {

Ontology::Ontology(
    const std::vector<std::pair<std::string, std::string>>& child_parent_edges)
    : edges_(child_parent_edges) {
  for (const auto& [child, parent] : child_parent_edges) {
    if (child == parent) {
      throw ConfigError("ontology edge from '" + child + "' to itself");
    }
    auto [it, inserted] = parent_.emplace(child, parent);
    if (!inserted && it->second != parent) {
      throw ConfigError("ontology label '" + child +
                        "' has more than one parent");
    }
    labels_.insert(child);
    labels_.insert(parent);
  }
  for (const auto& label : labels_) {
    std::set<std::string> seen{label};
    auto it = parent_.find(label);
    while (it != parent_.end()) {
      if (!seen.insert(it->second).second) {
        throw ConfigError("ontology has a cycle through '" + label + "'");
      }
      it = parent_.find(it->second);
    }
  }
}

std::vector<std::string> Ontology::Ancestors(const std::string& label) const {
  std::vector<std::string> out{label};
  auto it = parent_.find(label);
  while (it != parent_.end()) {
    out.push_back(it->second);
    it = parent_.find(it->second);
  }
  return out;
}

bool Ontology::IsStrictDescendant(const std::string& a,
                                  const std::string& b) const {
  if (a == b) return false;
  auto it = parent_.find(a);
  while (it != parent_.end()) {
    if (it->second == b) return true;
    it = parent_.find(it->second);
  }
  return false;
}

void DatasetConfig::CheckLabel(const std::string& category,
                               const std::string& label,
                               const std::string& path) const {
  auto it = labels.find(category);
  if (it == labels.end()) return;
  if (!it->second.count(label)) {
    throw DataError("label '" + label + "' is not declared in label set '" +
                        category + "'",
                    path);
  }
}

SlotKind DatasetConfig::KindOf(const std::string& slot) const {
  auto it = slots.find(slot);
  return it == slots.end() ? SlotKind::kString : it->second;
}

namespace {

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

// Runs `fn`, re-raising data errors as configuration errors.
template <typename Fn>
auto AsConfig(Fn fn) {
  try {
    return fn();
  } catch (const DataError& e) {
    throw ConfigError(e.message(), e.path());
  }
}

}  // namespace

Ontology ParseOntology(const Json& j, const std::string& path) {
  return AsConfig([&] {
    JsonCursor c(j, path);
    c.RequireObject();
    std::vector<std::pair<std::string, std::string>> edges;
    if (c.Has("edges")) {
      JsonCursor e = c.Key("edges");
      for (std::size_t i = 0; i < e.Size(); ++i) {
        JsonCursor pair = e.At(i);
        if (pair.Size() != 2) pair.Fail("edge must be [child, parent]");
        edges.emplace_back(pair.At(0).String(), pair.At(1).String());
      }
    }
    try {
      return Ontology(edges);
    } catch (const ConfigError& err) {
      throw ConfigError(err.message(), path + ".edges");
    }
  });
}

DatasetConfig ParseDatasetConfig(const Json& j) {
  return AsConfig([&] {
    JsonCursor c(j, "$");
    c.RequireObject();
    DatasetConfig cfg;
    if (c.Has("labels")) {
      JsonCursor l = c.Key("labels");
      l.RequireObject();
      for (const auto& [name, values] : l.json().items()) {
        JsonCursor v = l.Key(name);
        auto& set = cfg.labels[name];
        for (std::size_t i = 0; i < v.Size(); ++i) set.insert(v.At(i).String());
      }
    }
    if (c.Has("ontology")) {
      cfg.ontology = ParseOntology(c.Key("ontology").json(), "$.ontology");
    }
    if (c.Has("premodifiers")) {
      JsonCursor p = c.Key("premodifiers");
      for (std::size_t i = 0; i < p.Size(); ++i) {
        cfg.premodifiers.insert(Upper(p.At(i).String()));
      }
    }
    if (c.Has("slots")) {
      JsonCursor s = c.Key("slots");
      s.RequireObject();
      for (const auto& [name, kind] : s.json().items()) {
        std::string k = s.Key(name).String();
        if (k == "set") {
          cfg.slots[name] = SlotKind::kSet;
        } else if (k == "string") {
          cfg.slots[name] = SlotKind::kString;
        } else {
          s.Key(name).Fail("slot kind must be \"set\" or \"string\"");
        }
      }
    }
    return cfg;
  });
}

}  // namespace structeval::zoo
