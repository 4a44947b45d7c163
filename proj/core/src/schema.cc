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


#include "structeval/schema.h"

#include <deque>
#include <functional>
#include <set>

#include "structeval/errors.h"
#include "structeval/kernel.h"
#include "structeval/zoo/config.h"
#include "structeval/zoo/coref.h"
#include "structeval/zoo/hierarchy.h"

namespace structeval {

using Json = nlohmann::ordered_json;

// --- names -------------------------------------------------------------------

TypeKind ParseTypeKind(std::string_view name) {
  if (name == "Record") return TypeKind::kRecord;
  if (name == "Set") return TypeKind::kSet;
  if (name == "Sequence") return TypeKind::kSequence;
  if (name == "Graph") return TypeKind::kGraph;
  if (name == "Primitive") return TypeKind::kPrimitive;
  if (name == "Variable") return TypeKind::kVariable;
  throw SchemaError("unknown type kind '" + std::string(name) + "'");
}

const char* TypeKindName(TypeKind kind) {
  switch (kind) {
    case TypeKind::kRecord:
      return "Record";
    case TypeKind::kSet:
      return "Set";
    case TypeKind::kSequence:
      return "Sequence";
    case TypeKind::kGraph:
      return "Graph";
    case TypeKind::kPrimitive:
      return "Primitive";
    case TypeKind::kVariable:
      return "Variable";
  }
  return "?";
}

namespace {

constexpr const char* kBuiltins[] = {"int",   "real",  "bool",
                                     "string", "label", "atom"};

struct NodeName {
  SimSpec::Node node;
  const char* name;
};

constexpr NodeName kNodeNames[] = {
    {SimSpec::Node::kDiscrete, "Discrete"},
    {SimSpec::Node::kProduct, "Product"},
    {SimSpec::Node::kSetMatch, "SetMatch"},
    {SimSpec::Node::kLatentSetMatch, "LatentSetMatch"},
    {SimSpec::Node::kSeqMatch, "SeqMatch"},
    {SimSpec::Node::kGraphMatch, "GraphMatch"},
    {SimSpec::Node::kThreshold, "Threshold"},
    {SimSpec::Node::kTable, "Table"},
    {SimSpec::Node::kHierarchyLevel, "HierarchyLevel"},
    {SimSpec::Node::kHierarchySupertypes, "HierarchySupertypes"},
    {SimSpec::Node::kNamed, "Named"},
};

// Element-level builtins usable through Named.
constexpr const char* kElementBuiltins[] = {"phi3", "phi4", "phi_subset",
                                            "phi_link"};

bool IsElementBuiltin(std::string_view name) {
  for (const char* b : kElementBuiltins) {
    if (name == b) return true;
  }
  return false;
}

}  // namespace

bool IsBuiltinPrimitive(std::string_view name) {
  for (const char* b : kBuiltins) {
    if (name == b) return true;
  }
  return false;
}

const char* SimNodeName(SimSpec::Node node) {
  for (const auto& n : kNodeNames) {
    if (n.node == node) return n.name;
  }
  return "?";
}

const TypeDecl* Schema::Find(std::string_view name) const {
  for (const auto& t : types) {
    if (t.name == name) return &t;
  }
  static const std::vector<TypeDecl> kBuiltinDecls = [] {
    std::vector<TypeDecl> out;
    for (const char* b : kBuiltins) {
      TypeDecl d;
      d.name = b;
      d.kind = TypeKind::kPrimitive;
      d.primitive = b;
      out.push_back(std::move(d));
    }
    return out;
  }();
  for (const auto& t : kBuiltinDecls) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

// --- parsing -----------------------------------------------------------------

namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw SchemaError(message, path);
}

std::string Str(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

double Num(const Json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  return j.get<double>();
}

std::vector<std::string> StrList(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(Str(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void CheckKeys(const Json& j, const std::string& path,
               std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) Fail(path + "." + key, "unexpected key '" + key + "'");
  }
}

SimSpec ParseSim(const Json& j, const std::string& path) {
  SimSpec s;
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    for (const auto& n : kNodeNames) {
      if (name == n.name) {
        s.node = n.node;
        return s;
      }
    }
    s.node = SimSpec::Node::kNamed;
    s.name = name;
    return s;
  }
  if (!j.is_object()) Fail(path, "similarity must be an object or a string");
  if (!j.contains("node")) Fail(path, "missing key 'node'");
  std::string node = Str(j["node"], path + ".node");
  bool found = false;
  for (const auto& n : kNodeNames) {
    if (node == n.name) {
      s.node = n.node;
      found = true;
    }
  }
  if (!found) Fail(path + ".node", "unknown similarity node '" + node + "'");

  auto inner = [&] {
    if (j.contains("inner")) {
      s.inner = std::make_shared<SimSpec>(ParseSim(j["inner"], path + ".inner"));
    }
  };
  auto constraint = [&] {
    if (j.contains("constraint")) {
      try {
        s.constraint = ParseConstraint(Str(j["constraint"], path + ".constraint"));
      } catch (const Error& e) {
        Fail(path + ".constraint", e.message());
      }
    }
  };
  auto normalizer = [&] {
    if (j.contains("normalizer") && !j["normalizer"].is_null()) {
      try {
        s.normalizer = ParseNormalizer(Str(j["normalizer"], path + ".normalizer"));
      } catch (const Error& e) {
        Fail(path + ".normalizer", e.message());
      }
    }
  };

  using N = SimSpec::Node;
  switch (s.node) {
    case N::kDiscrete:
      CheckKeys(j, path, {"node"});
      break;
    case N::kProduct:
      CheckKeys(j, path, {"node", "children", "fields"});
      if (j.contains("children")) {
        const Json& c = j["children"];
        if (!c.is_array()) Fail(path + ".children", "expected an array");
        for (std::size_t i = 0; i < c.size(); ++i) {
          s.children.push_back(
              ParseSim(c[i], path + ".children[" + std::to_string(i) + "]"));
        }
      }
      if (j.contains("fields")) s.fields = StrList(j["fields"], path + ".fields");
      if (!s.children.empty() && !s.fields.empty()) {
        Fail(path, "Product takes either children or fields, not both");
      }
      break;
    case N::kSetMatch:
    case N::kSeqMatch:
      CheckKeys(j, path, {"node", "constraint", "inner", "normalizer"});
      inner();
      constraint();
      normalizer();
      if (s.node == N::kSeqMatch &&
          s.constraint != MatchConstraint::kOneToOne) {
        Fail(path + ".constraint", "SeqMatch supports only one-to-one");
      }
      break;
    case N::kLatentSetMatch:
      CheckKeys(j, path,
                {"node", "constraint", "inner", "normalizer", "var_fields"});
      inner();
      constraint();
      normalizer();
      if (j.contains("var_fields")) {
        s.fields = StrList(j["var_fields"], path + ".var_fields");
      }
      break;
    case N::kGraphMatch:
      CheckKeys(j, path,
                {"node", "constraint", "inner", "normalizer", "item_cap"});
      inner();
      constraint();
      normalizer();
      if (j.contains("item_cap")) {
        if (!j["item_cap"].is_number_integer() || j["item_cap"].get<int>() < 1) {
          Fail(path + ".item_cap", "item_cap must be a positive integer");
        }
        s.item_cap = j["item_cap"].get<int>();
      }
      break;
    case N::kThreshold:
      CheckKeys(j, path, {"node", "inner", "cutoff", "strict"});
      inner();
      if (j.contains("cutoff")) s.cutoff = Num(j["cutoff"], path + ".cutoff");
      if (s.cutoff < 0.0 || s.cutoff > 1.0) {
        Fail(path + ".cutoff", "cutoff must lie in [0, 1]");
      }
      if (j.contains("strict")) {
        if (!j["strict"].is_boolean()) Fail(path + ".strict", "expected a boolean");
        s.strict = j["strict"].get<bool>();
      }
      break;
    case N::kTable: {
      CheckKeys(j, path, {"node", "entries", "default"});
      if (j.contains("default")) {
        s.table_default = Num(j["default"], path + ".default");
      }
      if (s.table_default < 0.0 || s.table_default > 1.0) {
        Fail(path + ".default", "table values must lie in [0, 1]");
      }
      if (j.contains("entries")) {
        const Json& e = j["entries"];
        if (!e.is_array()) Fail(path + ".entries", "expected an array");
        for (std::size_t i = 0; i < e.size(); ++i) {
          std::string p = path + ".entries[" + std::to_string(i) + "]";
          if (!e[i].is_array() || e[i].size() != 3) {
            Fail(p, "table entry must be [pred, gold, value]");
          }
          SimSpec::TableEntry t{Str(e[i][0], p + "[0]"), Str(e[i][1], p + "[1]"),
                                Num(e[i][2], p + "[2]")};
          if (t.value < 0.0 || t.value > 1.0) {
            Fail(p + "[2]", "table values must lie in [0, 1]");
          }
          s.table.push_back(std::move(t));
        }
      }
      std::set<std::string> labels;
      std::map<std::string, double> diag;
      for (std::size_t i = 0; i < s.table.size(); ++i) {
        const auto& t = s.table[i];
        labels.insert(t.pred);
        labels.insert(t.gold);
        if (t.pred == t.gold) diag[t.pred] = t.value;
      }
      for (const auto& l : labels) {
        auto it = diag.find(l);
        if (it == diag.end() || it->second != 1.0) {
          Fail(path + ".entries",
               "table diagonal (" + l + ", " + l + ") must map to 1");
        }
      }
      break;
    }
    case N::kHierarchyLevel:
      CheckKeys(j, path, {"node", "depth"});
      if (!j.contains("depth") || !j["depth"].is_number_integer() ||
          j["depth"].get<int>() < 1) {
        Fail(path + ".depth", "depth must be a positive integer");
      }
      s.depth = j["depth"].get<int>();
      break;
    case N::kHierarchySupertypes:
      CheckKeys(j, path, {"node", "ontology"});
      if (j.contains("ontology")) {
        try {
          s.ontology_edges =
              zoo::ParseOntology(j["ontology"], path + ".ontology").edges();
        } catch (const Error& e) {
          Fail(path + ".ontology", e.message());
        }
      }
      break;
    case N::kNamed:
      CheckKeys(j, path, {"node", "name"});
      if (!j.contains("name")) Fail(path, "missing key 'name'");
      s.name = Str(j["name"], path + ".name");
      break;
  }
  return s;
}

TypeDecl ParseType(const std::string& name, const Json& j,
                   const std::string& path) {
  if (!j.is_object()) Fail(path, "type declaration must be an object");
  if (IsBuiltinPrimitive(name)) Fail(path, "'" + name + "' is a builtin type");
  TypeDecl t;
  t.name = name;
  if (!j.contains("kind")) Fail(path, "missing key 'kind'");
  try {
    t.kind = ParseTypeKind(Str(j["kind"], path + ".kind"));
  } catch (const SchemaError& e) {
    Fail(path + ".kind", e.message());
  }
  switch (t.kind) {
    case TypeKind::kRecord: {
      CheckKeys(j, path, {"kind", "fields", "sim"});
      if (!j.contains("fields") || !j["fields"].is_object()) {
        Fail(path + ".fields", "a Record needs a 'fields' object");
      }
      for (const auto& [fname, fj] : j["fields"].items()) {
        std::string fp = path + ".fields." + fname;
        FieldDecl f;
        f.name = fname;
        if (fj.is_string()) {
          f.type = fj.get<std::string>();
        } else if (fj.is_object()) {
          CheckKeys(fj, fp, {"type", "sim"});
          if (!fj.contains("type")) Fail(fp, "missing key 'type'");
          f.type = Str(fj["type"], fp + ".type");
          if (fj.contains("sim")) f.sim = ParseSim(fj["sim"], fp + ".sim");
        } else {
          Fail(fp, "field must be a type name or {\"type\", \"sim\"}");
        }
        t.fields.push_back(std::move(f));
      }
      break;
    }
    case TypeKind::kSet:
    case TypeKind::kSequence:
    case TypeKind::kGraph:
      CheckKeys(j, path, {"kind", "element", "sim"});
      if (!j.contains("element")) Fail(path, "missing key 'element'");
      t.element = Str(j["element"], path + ".element");
      break;
    case TypeKind::kPrimitive:
      CheckKeys(j, path, {"kind", "base", "sim"});
      t.primitive = j.contains("base") ? Str(j["base"], path + ".base")
                                       : std::string("string");
      if (!IsBuiltinPrimitive(t.primitive)) {
        Fail(path + ".base", "unknown primitive base '" + t.primitive + "'");
      }
      break;
    case TypeKind::kVariable:
      CheckKeys(j, path, {"kind"});
      break;
  }
  if (j.contains("sim")) t.sim = ParseSim(j["sim"], path + ".sim");
  return t;
}

void ResolveNames(const Schema& s) {
  for (const auto& t : s.types) {
    std::string path = "$.types." + t.name;
    for (const auto& f : t.fields) {
      if (s.Find(f.type) == nullptr) {
        Fail(path + ".fields." + f.name + ".type",
             "unknown type '" + f.type + "'");
      }
    }
    if (!t.element.empty() && s.Find(t.element) == nullptr) {
      Fail(path + ".element", "unknown type '" + t.element + "'");
    }
  }
  // Records may only nest records acyclically.
  std::map<std::string, int> state;
  std::function<void(const TypeDecl&, std::string)> visit =
      [&](const TypeDecl& t, std::string path) {
        state[t.name] = 1;
        for (const auto& f : t.fields) {
          const TypeDecl* ft = s.Find(f.type);
          if (ft->kind != TypeKind::kRecord) continue;
          std::string fp = path + ".fields." + f.name;
          if (state[ft->name] == 1) {
            Fail(fp, "record '" + t.name + "' nests itself through '" +
                         ft->name + "' without a collection");
          }
          if (state[ft->name] == 0) visit(*ft, "$.types." + ft->name);
        }
        state[t.name] = 2;
      };
  for (const auto& t : s.types) {
    if (t.kind == TypeKind::kRecord && state[t.name] == 0) {
      visit(t, "$.types." + t.name);
    }
  }
  const TypeDecl* root = s.Find(s.metric.root);
  if (root == nullptr) {
    Fail("$.metric.root", "unknown type '" + s.metric.root + "'");
  }
  if (root->kind != TypeKind::kSet && root->kind != TypeKind::kSequence &&
      root->kind != TypeKind::kGraph) {
    Fail("$.metric.root", "metric root must be a Set, Sequence or Graph type");
  }
}

}  // namespace

Schema ParseSchemaJson(const Json& j) {
  if (!j.is_object()) Fail("$", "schema must be a JSON object");
  CheckKeys(j, "$", {"types", "metric"});
  Schema s;
  if (!j.contains("types") || !j["types"].is_object()) {
    Fail("$.types", "missing 'types' object");
  }
  for (const auto& [name, tj] : j["types"].items()) {
    s.types.push_back(ParseType(name, tj, "$.types." + name));
  }
  if (!j.contains("metric") || !j["metric"].is_object()) {
    Fail("$.metric", "missing 'metric' object");
  }
  const Json& m = j["metric"];
  CheckKeys(m, "$.metric", {"root", "report", "aggregation", "name"});
  if (!m.contains("root")) Fail("$.metric", "missing key 'root'");
  s.metric.root = Str(m["root"], "$.metric.root");
  if (m.contains("name")) s.metric.name = Str(m["name"], "$.metric.name");
  if (m.contains("report")) {
    s.metric.report.clear();
    for (const auto& r : StrList(m["report"], "$.metric.report")) {
      try {
        s.metric.report.push_back(ParseNormalizer(r));
      } catch (const Error& e) {
        Fail("$.metric.report", e.message());
      }
    }
  }
  if (m.contains("aggregation")) {
    try {
      s.metric.aggregation =
          ParseAggregation(Str(m["aggregation"], "$.metric.aggregation"));
    } catch (const ConfigError& e) {
      Fail("$.metric.aggregation", e.message());
    }
  }
  ResolveNames(s);
  // Deriving the evaluator performs the remaining checks.
  DerivedMetric validate(s, DeriveOptions{});
  return s;
}

Schema ParseSchema(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what(), "$");
  }
  return ParseSchemaJson(j);
}

// --- serialization -----------------------------------------------------------

namespace {

Json SerializeSim(const SimSpec& s) {
  Json j;
  j["node"] = SimNodeName(s.node);
  using N = SimSpec::Node;
  auto common = [&] {
    j["constraint"] = ConstraintName(s.constraint);
    if (s.inner) j["inner"] = SerializeSim(*s.inner);
    if (s.normalizer) j["normalizer"] = NormalizerName(*s.normalizer);
  };
  switch (s.node) {
    case N::kDiscrete:
      break;
    case N::kProduct:
      if (!s.children.empty()) {
        j["children"] = Json::array();
        for (const auto& c : s.children) j["children"].push_back(SerializeSim(c));
      }
      if (!s.fields.empty()) j["fields"] = s.fields;
      break;
    case N::kSetMatch:
    case N::kSeqMatch:
      common();
      break;
    case N::kLatentSetMatch:
      common();
      if (!s.fields.empty()) j["var_fields"] = s.fields;
      break;
    case N::kGraphMatch:
      common();
      if (s.item_cap) j["item_cap"] = *s.item_cap;
      break;
    case N::kThreshold:
      if (s.inner) j["inner"] = SerializeSim(*s.inner);
      j["cutoff"] = s.cutoff;
      j["strict"] = s.strict;
      break;
    case N::kTable:
      j["entries"] = Json::array();
      for (const auto& e : s.table) {
        j["entries"].push_back(Json::array({e.pred, e.gold, e.value}));
      }
      j["default"] = s.table_default;
      break;
    case N::kHierarchyLevel:
      j["depth"] = s.depth;
      break;
    case N::kHierarchySupertypes:
      if (!s.ontology_edges.empty()) {
        Json edges = Json::array();
        for (const auto& [c, p] : s.ontology_edges) {
          edges.push_back(Json::array({c, p}));
        }
        j["ontology"]["edges"] = edges;
      }
      break;
    case N::kNamed:
      j["name"] = s.name;
      break;
  }
  return j;
}

}  // namespace

Json SerializeSchema(const Schema& s) {
  Json j;
  j["types"] = Json::object();
  for (const auto& t : s.types) {
    Json tj;
    tj["kind"] = TypeKindName(t.kind);
    switch (t.kind) {
      case TypeKind::kRecord:
        tj["fields"] = Json::object();
        for (const auto& f : t.fields) {
          Json fj;
          fj["type"] = f.type;
          if (f.sim) fj["sim"] = SerializeSim(*f.sim);
          tj["fields"][f.name] = fj;
        }
        break;
      case TypeKind::kSet:
      case TypeKind::kSequence:
      case TypeKind::kGraph:
        tj["element"] = t.element;
        break;
      case TypeKind::kPrimitive:
        tj["base"] = t.primitive;
        break;
      case TypeKind::kVariable:
        break;
    }
    if (t.sim) tj["sim"] = SerializeSim(*t.sim);
    j["types"][t.name] = tj;
  }
  Json m;
  m["root"] = s.metric.root;
  if (!s.metric.name.empty()) m["name"] = s.metric.name;
  m["report"] = Json::array();
  for (Normalizer n : s.metric.report) m["report"].push_back(NormalizerName(n));
  m["aggregation"] = AggregationName(s.metric.aggregation);
  j["metric"] = m;
  return j;
}

// --- derivation --------------------------------------------------------------

namespace {

using ValueSim = Similarity<Value>;
using TripleFn =
    std::function<OverlapTriple(const Value&, const Value&, EvalContext)>;

std::span<const Value> Items(const Value& v) { return v.children; }

std::string AtomText(const Atom& a) {
  if (const auto* s = std::get_if<std::string>(&a.data())) return *s;
  return a.ToString();
}

std::vector<std::string> Labels(const Value& v) {
  std::vector<std::string> out;
  if (v.kind == Value::Kind::kAtom) {
    out.push_back(AtomText(v.atom));
    return out;
  }
  for (const Value& c : v.children) out.push_back(AtomText(c.atom));
  return out;
}

zoo::Entity ToEntity(const Value& v) {
  zoo::Entity e;
  for (const Value& c : v.children) e.push_back(c.atom);
  return e;
}

ValueSim FromTriple(TripleFn fn, std::optional<Normalizer> n) {
  return ValueSim(
      [fn = std::move(fn), n](const Value& a, const Value& b, EvalContext ctx) {
        OverlapTriple t = fn(a, b, ctx);
        if (!n) return t.sigma_pr;
        return Normalize(*n, t).value;
      },
      n.has_value());
}

}  // namespace

struct DerivedMetric::Impl {
  Schema schema;
  DeriveOptions options;
  // Compiled type similarities. Deque elements never move, so forwarding
  // closures may hold raw pointers to them.
  std::deque<ValueSim> slots;
  std::map<std::string, ValueSim*, std::less<>> slot_of;
  std::map<std::string, bool, std::less<>> normalized_memo;
  std::set<std::string, std::less<>> normalized_busy;
  std::set<std::string, std::less<>> compiling;
  TripleFn root_triple;
  const zoo::ZooMetric* root_zoo = nullptr;

  const TypeDecl& Decl(std::string_view name) const {
    const TypeDecl* t = schema.Find(name);
    if (t == nullptr) throw SchemaError("unknown type '" + std::string(name) + "'");
    return *t;
  }

  static std::string TypePath(const TypeDecl& t) { return "$.types." + t.name; }

  SimSpec DefaultSpec(const TypeDecl& t) const {
    if (t.sim) return *t.sim;
    SimSpec s;
    switch (t.kind) {
      case TypeKind::kRecord:
        s.node = SimSpec::Node::kProduct;
        break;
      case TypeKind::kSet:
        s.node = SimSpec::Node::kSetMatch;
        break;
      case TypeKind::kSequence:
        s.node = SimSpec::Node::kSeqMatch;
        break;
      case TypeKind::kGraph:
        s.node = SimSpec::Node::kGraphMatch;
        break;
      case TypeKind::kPrimitive:
      case TypeKind::kVariable:
        s.node = SimSpec::Node::kDiscrete;
        break;
    }
    return s;
  }

  // --- static normalization flags (greatest fixed point over cycles) ----

  bool TypeNormalized(const TypeDecl& t) {
    if (auto it = normalized_memo.find(t.name); it != normalized_memo.end()) {
      return it->second;
    }
    if (normalized_busy.count(t.name)) return true;
    normalized_busy.insert(t.name);
    bool n = SpecNormalized(DefaultSpec(t), t, {});
    normalized_busy.erase(t.name);
    normalized_memo[t.name] = n;
    return n;
  }

  bool SpecNormalized(const SimSpec& s, const TypeDecl& t,
                      const std::set<std::string>& latent) {
    using N = SimSpec::Node;
    switch (s.node) {
      case N::kDiscrete:
      case N::kThreshold:
      case N::kTable:
      case N::kHierarchyLevel:
      case N::kHierarchySupertypes:
        return true;
      case N::kNamed:
        return s.name == "phi4" || s.name == "phi_subset";
      case N::kSetMatch:
      case N::kLatentSetMatch:
      case N::kSeqMatch:
      case N::kGraphMatch:
        return s.normalizer.has_value();
      case N::kProduct: {
        if (!s.children.empty()) {
          for (const auto& c : s.children) {
            if (!SpecNormalized(c, t, latent)) return false;
          }
          return true;
        }
        for (const auto& f : t.fields) {
          if (!s.fields.empty() &&
              std::find(s.fields.begin(), s.fields.end(), f.name) ==
                  s.fields.end()) {
            continue;
          }
          if (latent.count(f.name)) continue;
          const TypeDecl& ft = Decl(f.type);
          bool n = f.sim ? SpecNormalized(*f.sim, ft, {}) : TypeNormalized(ft);
          if (!n) return false;
        }
        return true;
      }
    }
    return true;
  }

  // --- compilation -------------------------------------------------------

  // A forwarding reference to the compiled similarity of a named type.
  ValueSim TypeRef(const TypeDecl& t) {
    auto it = slot_of.find(t.name);
    if (it == slot_of.end()) {
      ValueSim* slot = &slots.emplace_back();
      slot_of.emplace(t.name, slot);
      compiling.insert(t.name);
      *slot = Compile(DefaultSpec(t), t, TypePath(t) + ".sim", {});
      compiling.erase(t.name);
      it = slot_of.find(t.name);
    }
    ValueSim* slot = it->second;
    return ValueSim(
        [slot](const Value& a, const Value& b, EvalContext ctx) {
          return slot->Value(a, b, ctx);
        },
        TypeNormalized(t));
  }

  const TypeDecl& Element(const TypeDecl& t, const std::string& path) {
    if (t.element.empty()) Fail(path, "type '" + t.name + "' has no element");
    return Decl(t.element);
  }

  ValueSim ElementSim(const SimSpec& s, const TypeDecl& t,
                      const std::string& path) {
    const TypeDecl& e = Element(t, path);
    if (s.inner) return Compile(*s.inner, e, path + ".inner", {});
    if (e.kind == TypeKind::kVariable) {
      Fail(path, "variable elements are only allowed inside LatentSetMatch");
    }
    return TypeRef(e);
  }

  void RequireKind(const TypeDecl& t, std::initializer_list<TypeKind> kinds,
                   const SimSpec& s, const std::string& path) {
    for (TypeKind k : kinds) {
      if (t.kind == k) return;
    }
    Fail(path, std::string(SimNodeName(s.node)) + " cannot apply to " +
                   TypeKindName(t.kind) + " type '" + t.name + "'");
  }

  const TypeDecl& PrimitiveElement(const TypeDecl& t, const SimSpec& s,
                                   const std::string& path) {
    const TypeDecl& e = Element(t, path);
    if (e.kind != TypeKind::kPrimitive) {
      Fail(path, std::string(SimNodeName(s.node)) +
                     " needs a collection of primitives");
    }
    return e;
  }

  // Compiles `s` as a similarity over values of type `t`. `latent` names the
  // record fields of `t` that hold latent variables (only inside
  // LatentSetMatch).
  ValueSim Compile(const SimSpec& s, const TypeDecl& t, const std::string& path,
                   const std::set<std::string>& latent) {
    using N = SimSpec::Node;
    switch (s.node) {
      case N::kDiscrete:
        if (t.kind == TypeKind::kVariable) {
          Fail(path, "variable type '" + t.name +
                         "' is only comparable inside LatentSetMatch");
        }
        RequireKind(t, {TypeKind::kPrimitive}, s, path);
        return ValueSim(
            [](const Value& a, const Value& b, EvalContext) {
              return DiscreteSim(a.atom, b.atom).value;
            },
            true);
      case N::kProduct:
        return CompileProduct(s, t, path, latent);
      case N::kSetMatch: {
        RequireKind(t, {TypeKind::kSet}, s, path);
        return FromTriple(CompileTriple(s, t, path), s.normalizer);
      }
      case N::kLatentSetMatch:
        RequireKind(t, {TypeKind::kSet}, s, path);
        return FromTriple(CompileTriple(s, t, path), s.normalizer);
      case N::kSeqMatch:
        RequireKind(t, {TypeKind::kSequence}, s, path);
        return FromTriple(CompileTriple(s, t, path), s.normalizer);
      case N::kGraphMatch:
        RequireKind(t, {TypeKind::kGraph}, s, path);
        return FromTriple(CompileTriple(s, t, path), s.normalizer);
      case N::kThreshold: {
        if (!s.inner) Fail(path, "Threshold needs an 'inner' similarity");
        ValueSim inner = Compile(*s.inner, t, path + ".inner", latent);
        try {
          return Threshold(std::move(inner), s.cutoff, s.strict);
        } catch (const ConfigError& e) {
          Fail(path, e.message());
        }
      }
      case N::kTable: {
        RequireKind(t, {TypeKind::kPrimitive}, s, path);
        std::map<std::pair<std::string, std::string>, double> table;
        for (const auto& e : s.table) table[{e.pred, e.gold}] = e.value;
        double dflt = s.table_default;
        return ValueSim(
            [table = std::move(table), dflt](const Value& a, const Value& b,
                                             EvalContext) {
              std::string x = AtomText(a.atom), y = AtomText(b.atom);
              auto it = table.find({x, y});
              if (it != table.end()) return it->second;
              return x == y ? 1.0 : dflt;
            },
            true);
      }
      case N::kHierarchyLevel: {
        RequireKind(t, {TypeKind::kSequence}, s, path);
        PrimitiveElement(t, s, path);
        std::size_t depth = static_cast<std::size_t>(s.depth);
        return ValueSim(
            [depth](const Value& a, const Value& b, EvalContext) {
              zoo::TypePath pa = Labels(a), pb = Labels(b);
              if (pa.size() != depth || pb.size() != depth) {
                throw DataError("type path depth differs from the declared "
                                "depth " + std::to_string(depth));
              }
              return zoo::TypeSimilarityLevel(pa, pb).value;
            },
            true);
      }
      case N::kHierarchySupertypes: {
        RequireKind(t, {TypeKind::kSet, TypeKind::kPrimitive}, s, path);
        if (t.kind == TypeKind::kSet) PrimitiveElement(t, s, path);
        auto ontology = std::make_shared<zoo::Ontology>(
            s.ontology_edges.empty() && options.config != nullptr
                ? options.config->ontology
                : zoo::Ontology(s.ontology_edges));
        return ValueSim(
            [ontology](const Value& a, const Value& b, EvalContext) {
              auto la = Labels(a), lb = Labels(b);
              return zoo::TypeSimilaritySupertypes(la, lb, *ontology).value;
            },
            true);
      }
      case N::kNamed: {
        if (!IsElementBuiltin(s.name)) {
          if (zoo::FindZooMetric(s.name) != nullptr) {
            Fail(path, "zoo metric '" + s.name +
                           "' may only be used as the metric root");
          }
          Fail(path, "unknown builtin similarity '" + s.name + "'");
        }
        RequireKind(t, {TypeKind::kSet}, s, path);
        PrimitiveElement(t, s, path);
        Similarity<zoo::Entity> inner =
            s.name == "phi3"         ? zoo::Phi3()
            : s.name == "phi4"       ? zoo::Phi4()
            : s.name == "phi_subset" ? zoo::PhiSubset()
                                     : zoo::PhiLink();
        bool normalized = inner.normalized();
        return ValueSim(
            [inner](const Value& a, const Value& b, EvalContext ctx) {
              return inner.Value(ToEntity(a), ToEntity(b), ctx);
            },
            normalized);
      }
    }
    Fail(path, "unsupported similarity node");
  }

  ValueSim CompileProduct(const SimSpec& s, const TypeDecl& t,
                          const std::string& path,
                          const std::set<std::string>& latent) {
    std::vector<ValueSim> parts;
    if (!s.children.empty()) {
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        parts.push_back(Compile(s.children[i], t,
                                path + ".children[" + std::to_string(i) + "]",
                                latent));
      }
      return Product<Value>(std::move(parts));
    }
    RequireKind(t, {TypeKind::kRecord}, s, path);
    for (const auto& name : s.fields) {
      bool known = false;
      for (const auto& f : t.fields) known = known || f.name == name;
      if (!known) {
        Fail(path + ".fields", "record '" + t.name + "' has no field '" +
                                   name + "'");
      }
    }
    for (std::size_t i = 0; i < t.fields.size(); ++i) {
      const FieldDecl& f = t.fields[i];
      if (!s.fields.empty() &&
          std::find(s.fields.begin(), s.fields.end(), f.name) ==
              s.fields.end()) {
        continue;
      }
      std::string fp = TypePath(t) + ".fields." + f.name;
      const TypeDecl& ft = Decl(f.type);
      ValueSim fs;
      if (latent.count(f.name)) {
        if (f.sim && f.sim->node != SimSpec::Node::kDiscrete) {
          Fail(fp + ".sim", "latent fields compare by variable alignment");
        }
        Similarity<LatentSlot> slot = ConditionedSlotSim();
        fs = ValueSim(
            [slot](const Value& a, const Value& b, EvalContext ctx) {
              return slot.Value(a.slot, b.slot, ctx);
            },
            true);
      } else if (ft.kind == TypeKind::kVariable) {
        Fail(fp, "variable field '" + f.name +
                     "' is only allowed inside LatentSetMatch");
      } else if (f.sim) {
        fs = Compile(*f.sim, ft, fp + ".sim", {});
      } else {
        fs = TypeRef(ft);
      }
      parts.push_back(Project<Value, Value>(
          [i](const Value& v) -> const Value& { return v.children[i]; },
          std::move(fs)));
    }
    return Product<Value>(std::move(parts));
  }

  TripleFn CompileTriple(const SimSpec& s, const TypeDecl& t,
                         const std::string& path) {
    using N = SimSpec::Node;
    const std::string level = t.name;
    const MatchConstraint c = s.constraint;
    switch (s.node) {
      case N::kSetMatch: {
        ValueSim inner = ElementSim(s, t, path);
        return [inner, c, level](const Value& a, const Value& b,
                                 EvalContext ctx) {
          return Overlap(Items(a), Items(b), inner, c, ctx, level);
        };
      }
      case N::kSeqMatch: {
        ValueSim inner = ElementSim(s, t, path);
        return [inner, level](const Value& a, const Value& b,
                              EvalContext ctx) {
          WeightMatrix w = BuildWeights(Items(a), Items(b), inner, ctx);
          Matching m = SeqMatchScore(w);
          RecordWitness(level, m, w, Items(a), Items(b), inner, ctx);
          return OverlapTriple{m.score, SelfScore(Items(a), inner, ctx),
                               SelfScore(Items(b), inner, ctx)};
        };
      }
      case N::kGraphMatch: {
        ValueSim inner = ElementSim(s, t, path);
        GraphOptions g = options.graph;
        if (s.item_cap) g.item_cap = *s.item_cap;
        return [inner, c, g, level](const Value& a, const Value& b,
                                    EvalContext ctx) {
          WeightMatrix w = BuildWeights(Items(a), Items(b), inner, ctx);
          Matching m = GraphMatchScore(w, *a.order, *b.order, c, g.node_limit,
                                       g.item_cap);
          RecordWitness(level, m, w, Items(a), Items(b), inner, ctx);
          return OverlapTriple{m.score, SelfScore(Items(a), inner, ctx),
                               SelfScore(Items(b), inner, ctx)};
        };
      }
      case N::kLatentSetMatch: {
        const TypeDecl& e = Element(t, path);
        if (e.kind != TypeKind::kRecord) {
          Fail(path, "LatentSetMatch needs a Record element type");
        }
        std::set<std::string> latent(s.fields.begin(), s.fields.end());
        if (latent.empty()) {
          for (const auto& f : e.fields) {
            if (Decl(f.type).kind == TypeKind::kVariable) latent.insert(f.name);
          }
        }
        std::vector<LatentField<Value>> fields;
        for (std::size_t i = 0; i < e.fields.size(); ++i) {
          const FieldDecl& f = e.fields[i];
          if (!latent.count(f.name)) continue;
          if (Decl(f.type).kind != TypeKind::kVariable) {
            Fail(path + ".var_fields",
                 "field '" + f.name + "' is not of a Variable type");
          }
          fields.push_back({f.name, [i](const Value& v) {
                              return v.children[i].slot;
                            }});
        }
        for (const auto& name : latent) {
          bool known = false;
          for (const auto& f : e.fields) known = known || f.name == name;
          if (!known) {
            Fail(path + ".var_fields",
                 "record '" + e.name + "' has no field '" + name + "'");
          }
        }
        SimSpec upper_spec;
        if (s.inner) {
          upper_spec = *s.inner;
        } else if (e.sim) {
          upper_spec = *e.sim;
        } else {
          upper_spec.node = SimSpec::Node::kProduct;
        }
        ValueSim upper = Compile(upper_spec, e, path + ".inner", latent);
        LatentOptions lo = options.latent;
        return [upper, fields, c, lo, level](const Value& a, const Value& b,
                                             EvalContext ctx) {
          return LatentOverlap(Items(a), Items(b), upper, fields, c, lo, ctx,
                               level);
        };
      }
      default:
        Fail(path, "not a collection matching node");
    }
  }

  // --- values ------------------------------------------------------------

  Value Read(const TypeDecl& t, const Json& j, const std::string& path) const {
    auto fail = [&](const std::string& m) -> Value { throw DataError(m, path); };
    switch (t.kind) {
      case TypeKind::kPrimitive: {
        const std::string& b = t.primitive;
        if (b == "int") {
          if (!j.is_number_integer()) return fail("expected int");
          return Value::OfAtom(Atom(j.get<std::int64_t>()));
        }
        if (b == "real") {
          if (!j.is_number()) return fail("expected real");
          return Value::OfAtom(Atom(j.get<double>()));
        }
        if (b == "bool") {
          if (!j.is_boolean()) return fail("expected bool");
          return Value::OfAtom(Atom(j.get<bool>()));
        }
        if (b == "string" || b == "label") {
          if (!j.is_string()) return fail("expected " + b);
          return Value::OfAtom(Atom(j.get<std::string>()));
        }
        return Value::OfAtom(zoo::JsonCursor(j, path).ToAtom());
      }
      case TypeKind::kVariable:
        if (j.is_string()) return Value::OfSlot({true, j.get<std::string>()});
        if (j.is_object() && j.contains("var") && j["var"].is_string()) {
          return Value::OfSlot({true, j["var"].get<std::string>()});
        }
        if (j.is_object() && j.contains("concept") && j["concept"].is_string()) {
          return Value::OfSlot({false, j["concept"].get<std::string>()});
        }
        return fail("expected a variable name, {\"var\": ...} or "
                    "{\"concept\": ...}");
      case TypeKind::kRecord: {
        if (!j.is_object()) return fail("expected object for record '" + t.name + "'");
        std::vector<Value> fields;
        for (const auto& f : t.fields) {
          auto it = j.find(f.name);
          if (it == j.end()) {
            return fail("missing field '" + f.name + "' of record '" + t.name + "'");
          }
          fields.push_back(Read(Decl(f.type), *it, path + "." + f.name));
        }
        return Value::Record(std::move(fields));
      }
      case TypeKind::kSet:
      case TypeKind::kSequence: {
        if (!j.is_array()) return fail("expected array for '" + t.name + "'");
        const TypeDecl& e = Decl(t.element);
        std::vector<Value> items;
        for (std::size_t i = 0; i < j.size(); ++i) {
          items.push_back(Read(e, j[i], path + "[" + std::to_string(i) + "]"));
        }
        return Value::List(std::move(items));
      }
      case TypeKind::kGraph: {
        const Json* items_j = &j;
        std::vector<std::pair<int, int>> pairs;
        OrderKind kind = OrderKind::kTotal;
        if (j.is_object()) {
          if (!j.contains("items")) return fail("graph needs 'items'");
          items_j = &j["items"];
          if (j.contains("order")) {
            const Json& o = j["order"];
            if (!o.is_array()) return fail("graph 'order' must be an array");
            for (std::size_t i = 0; i < o.size(); ++i) {
              if (!o[i].is_array() || o[i].size() != 2 ||
                  !o[i][0].is_number_integer() || !o[i][1].is_number_integer()) {
                throw DataError("order pair must be [int, int]",
                                path + ".order[" + std::to_string(i) + "]");
              }
              pairs.emplace_back(o[i][0].get<int>(), o[i][1].get<int>());
            }
            kind = OrderKind::kPartial;
          }
          if (j.contains("kind")) {
            if (!j["kind"].is_string()) return fail("graph 'kind' must be a string");
            try {
              kind = ParseOrderKind(j["kind"].get<std::string>());
            } catch (const DataError& e) {
              throw DataError(e.message(), path + ".kind");
            }
          }
        }
        if (!items_j->is_array()) return fail("graph items must be an array");
        const TypeDecl& e = Decl(t.element);
        std::vector<Value> items;
        for (std::size_t i = 0; i < items_j->size(); ++i) {
          items.push_back(Read(e, (*items_j)[i],
                               path + ".items[" + std::to_string(i) + "]"));
        }
        try {
          OrderRelation rel(static_cast<int>(items.size()), kind, pairs);
          return Value::Graph(std::move(items), std::move(rel));
        } catch (const DataError& err) {
          throw DataError(err.message(), path + ".order");
        }
      }
    }
    return fail("unsupported type");
  }
};

DerivedMetric::DerivedMetric(Schema schema, DeriveOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->schema = std::move(schema);
  impl_->options = options;
  Impl& m = *impl_;
  const TypeDecl& root = m.Decl(m.schema.metric.root);
  SimSpec spec = m.DefaultSpec(root);
  std::string path = "$.types." + root.name + ".sim";
  if (spec.node == SimSpec::Node::kNamed && !IsElementBuiltin(spec.name)) {
    m.root_zoo = zoo::FindZooMetric(spec.name);
    if (m.root_zoo == nullptr) {
      Fail(path, "unknown builtin metric '" + spec.name + "'");
    }
    return;
  }
  using N = SimSpec::Node;
  if (spec.node != N::kSetMatch && spec.node != N::kLatentSetMatch &&
      spec.node != N::kSeqMatch && spec.node != N::kGraphMatch) {
    Fail(path, "metric root similarity must be a matching node");
  }
  m.RequireKind(root,
                {spec.node == N::kSeqMatch     ? TypeKind::kSequence
                 : spec.node == N::kGraphMatch ? TypeKind::kGraph
                                               : TypeKind::kSet},
                spec, path);
  m.root_triple = m.CompileTriple(spec, root, path);
  // Compile every other type whose default similarity stands on its own, so
  // that errors surface at load time.
  for (const auto& t : m.schema.types) {
    bool has_var = false;
    for (const auto& f : t.fields) {
      has_var = has_var || m.Decl(f.type).kind == TypeKind::kVariable;
    }
    if (t.kind == TypeKind::kVariable || has_var) continue;
    if (t.kind != TypeKind::kVariable) {
      const TypeDecl* e = t.element.empty() ? nullptr : &m.Decl(t.element);
      if (e != nullptr && e->kind == TypeKind::kVariable) continue;
      SimSpec ts = m.DefaultSpec(t);
      if (ts.node == N::kLatentSetMatch) continue;
      if (ts.node == N::kNamed && !IsElementBuiltin(ts.name)) {
        if (&t != &root) {
          Fail("$.types." + t.name + ".sim",
               "zoo metric '" + ts.name + "' may only be used as the metric root");
        }
        continue;
      }
    }
    m.TypeRef(t);
  }
}

DerivedMetric::~DerivedMetric() = default;
DerivedMetric::DerivedMetric(DerivedMetric&&) noexcept = default;
DerivedMetric& DerivedMetric::operator=(DerivedMetric&&) noexcept = default;

const Schema& DerivedMetric::schema() const { return impl_->schema; }

Value DerivedMetric::ReadValue(std::string_view type, const Json& j,
                               const std::string& path) const {
  return impl_->Read(impl_->Decl(type), j, path);
}

const Similarity<Value>& DerivedMetric::SimilarityOf(std::string_view type) const {
  auto it = impl_->slot_of.find(type);
  if (it == impl_->slot_of.end()) {
    throw SchemaError("type '" + std::string(type) +
                      "' has no standalone similarity");
  }
  return *it->second;
}

MetricCounts DerivedMetric::Evaluate(const Json& pred, const Json& gold,
                                     EvalContext ctx) const {
  bool exact = true;
  EvalContext inner{ctx.sink, &exact};
  MetricCounts counts;
  if (impl_->root_zoo != nullptr) {
    zoo::ZooContext zc{impl_->options.config, impl_->options.latent};
    counts = impl_->root_zoo->evaluate(zoo::JsonCursor(pred, "$.pred"),
                                       zoo::JsonCursor(gold, "$.gold"), zc,
                                       inner);
  } else {
    const TypeDecl& root = impl_->Decl(impl_->schema.metric.root);
    Value p = impl_->Read(root, pred, "$.pred");
    Value g = impl_->Read(root, gold, "$.gold");
    counts = MetricCounts::Single(impl_->root_triple(p, g, inner));
  }
  counts.exact = counts.exact && exact;
  if (!counts.exact) ctx.MarkInexact();
  return counts;
}

}  // namespace structeval
