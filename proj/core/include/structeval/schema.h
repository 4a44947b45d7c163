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


#ifndef STRUCTEVAL_SCHEMA_H_
#define STRUCTEVAL_SCHEMA_H_

// Declarative task-output schemas and the evaluators derived from them.
//
// A schema names types (records, sets, sequences, graphs, primitives and
// latent variables) and attaches similarity specifications to them. Deriving
// a type composes the core combinators bottom-up; the metric definition then
// normalizes the root overlap triple.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "structeval/latent.h"
#include "structeval/matcher.h"
#include "structeval/ordered.h"
#include "structeval/report.h"
#include "structeval/sim.h"
#include "structeval/value.h"
#include "structeval/zoo/registry.h"

namespace structeval {

enum class TypeKind { kRecord, kSet, kSequence, kGraph, kPrimitive, kVariable };
TypeKind ParseTypeKind(std::string_view name);
const char* TypeKindName(TypeKind kind);

// Builtin primitive types: int, real, bool, string, label and atom (any
// scalar or tuple of scalars).
bool IsBuiltinPrimitive(std::string_view name);

struct SimSpec {
  enum class Node {
    kDiscrete,
    kProduct,
    kSetMatch,
    kLatentSetMatch,
    kSeqMatch,
    kGraphMatch,
    kThreshold,
    kTable,
    kHierarchyLevel,
    kHierarchySupertypes,
    kNamed,
  };
  struct TableEntry {
    std::string pred;
    std::string gold;
    double value = 0.0;
  };

  Node node = Node::kDiscrete;
  // Product: explicit components; empty means one per record field.
  std::vector<SimSpec> children;
  // Product: record fields to include (empty: all). LatentSetMatch: latent
  // fields (empty: every Variable field of the element record).
  std::vector<std::string> fields;
  // SetMatch, LatentSetMatch, SeqMatch, GraphMatch, Threshold.
  std::shared_ptr<SimSpec> inner;
  MatchConstraint constraint = MatchConstraint::kOneToOne;
  std::optional<Normalizer> normalizer;
  std::optional<int> item_cap;  // GraphMatch
  double cutoff = 0.5;          // Threshold
  bool strict = true;           // Threshold
  std::vector<TableEntry> table;
  double table_default = 0.0;
  int depth = 0;  // HierarchyLevel
  std::vector<std::pair<std::string, std::string>> ontology_edges;
  std::string name;  // Named
};

const char* SimNodeName(SimSpec::Node node);

struct FieldDecl {
  std::string name;
  std::string type;
  std::optional<SimSpec> sim;
};

struct TypeDecl {
  std::string name;
  TypeKind kind = TypeKind::kPrimitive;
  std::vector<FieldDecl> fields;  // kRecord
  std::string element;            // kSet, kSequence, kGraph
  std::string primitive;          // kPrimitive: the builtin it refines
  std::optional<SimSpec> sim;
};

struct MetricDef {
  std::string name;
  std::string root;
  std::vector<Normalizer> report = {Normalizer::kPrecision, Normalizer::kRecall,
                                    Normalizer::kF, Normalizer::kJaccard};
  Aggregation aggregation = Aggregation::kMicro;
};

struct Schema {
  std::vector<TypeDecl> types;  // declaration order
  MetricDef metric;

  // Null for unknown names. Builtin primitives resolve to synthesized
  // declarations.
  const TypeDecl* Find(std::string_view name) const;
};

// Throws SchemaError (with a JSON path) on any structural problem: unknown
// type names, invalid node/kind pairings, table diagonals other than 1,
// cyclic record nesting, variables outside latent matching and so on.
Schema ParseSchema(std::string_view text);
Schema ParseSchemaJson(const nlohmann::ordered_json& j);
nlohmann::ordered_json SerializeSchema(const Schema& s);

struct DeriveOptions {
  LatentOptions latent;
  GraphOptions graph;
  const zoo::DatasetConfig* config = nullptr;
};

// A compiled evaluator. Immutable and safe to share between threads.
class DerivedMetric {
 public:
  DerivedMetric(Schema schema, DeriveOptions options);
  ~DerivedMetric();
  DerivedMetric(DerivedMetric&&) noexcept;
  DerivedMetric& operator=(DerivedMetric&&) noexcept;

  const Schema& schema() const;

  // Reads a payload into a typed value. Throws DataError with `path`.
  Value ReadValue(std::string_view type, const nlohmann::ordered_json& j,
                  const std::string& path = "$") const;

  // The similarity of a named type.
  const Similarity<Value>& SimilarityOf(std::string_view type) const;

  // Overlap counts of the root collection, or the zoo metric's counts when
  // the root is a Named builtin.
  MetricCounts Evaluate(const nlohmann::ordered_json& pred,
                        const nlohmann::ordered_json& gold,
                        EvalContext ctx = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace structeval

#endif  // STRUCTEVAL_SCHEMA_H_
