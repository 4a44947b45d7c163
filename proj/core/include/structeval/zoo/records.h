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


#ifndef STRUCTEVAL_ZOO_RECORDS_H_
#define STRUCTEVAL_ZOO_RECORDS_H_

// Task output records for the metric zoo and their JSON readers.

#include <cstdint>
#include <string>
#include <vector>

#include "structeval/latent.h"
#include "structeval/sim.h"
#include "structeval/zoo/config.h"
#include "structeval/zoo/json_reader.h"

namespace structeval::zoo {

// Inclusive token span.
struct Mention {
  std::int64_t left = 0;
  std::int64_t right = 0;
  bool operator==(const Mention&) const = default;
};

struct Relation {
  std::string type;
  Mention subj;
  Mention obj;
};

struct DependencyEdge {
  std::int64_t gov = 0;
  std::int64_t dep = 0;
  std::string rel;
};

struct Trigger {
  Mention mention;
  std::string type;
};

struct Argument {
  Mention mention;
  std::string role;
};

struct Event {
  Trigger trig;
  std::vector<Argument> args;
};

// A coreference entity: its mentions, each an opaque primitive (a string,
// an integer or a [left, right] tuple).
using Entity = std::vector<Atom>;

struct RoleFiller {
  std::string role;
  Entity entity;
};

// A mention given as a set of token indices.
struct IndexMention {
  std::vector<std::int64_t> indices;  // sorted, unique
};

struct IndexRoleFiller {
  std::string role;
  std::vector<IndexMention> mentions;
};

struct NAryRelation {
  std::string type;
  std::vector<IndexRoleFiller> args;
};

struct SlotFiller {
  std::string slot;
  // A set-fill label (one value) or the strings of a string-fill entity.
  std::vector<std::string> values;
};

struct Template {
  std::string type;
  std::vector<SlotFiller> fillers;
};

// Readers. `cfg` supplies optional label sets.
Mention ReadMention(const JsonCursor& c);
std::vector<Relation> ReadRelations(const JsonCursor& c,
                                    const DatasetConfig& cfg);
std::vector<DependencyEdge> ReadEdges(const JsonCursor& c,
                                      const DatasetConfig& cfg);
std::vector<Event> ReadEvents(const JsonCursor& c, const DatasetConfig& cfg);
// Throws DataError when a mention occurs twice on one side.
std::vector<Entity> ReadEntities(const JsonCursor& c);
std::vector<RoleFiller> ReadRoleFillers(const JsonCursor& c,
                                        const DatasetConfig& cfg);
// Throws DataError when a relation does not have exactly `arity` arguments.
std::vector<NAryRelation> ReadNAryRelations(const JsonCursor& c,
                                            const DatasetConfig& cfg,
                                            std::size_t arity);
std::vector<Template> ReadTemplates(const JsonCursor& c,
                                    const DatasetConfig& cfg);
// Accepts a list of propositions or {"props": [...], "vars": [...]}.
AmrGraph ReadAmr(const JsonCursor& c, const DatasetConfig& cfg);

// Reads an entity's mention list.
Entity ReadEntity(const JsonCursor& c);

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_RECORDS_H_
