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


#include "structeval/zoo/records.h"

#include <algorithm>
#include <set>

#include "structeval/errors.h"

namespace structeval::zoo {

namespace {

std::string Label(const JsonCursor& c, const std::string& key,
                  const std::string& category, const DatasetConfig& cfg) {
  JsonCursor v = c.Key(key);
  std::string s = v.String();
  cfg.CheckLabel(category, s, v.path());
  return s;
}

}  // namespace

Mention ReadMention(const JsonCursor& c) {
  Mention m;
  if (c.json().is_array()) {
    if (c.Size() != 2) c.Fail("mention must be [left, right]");
    m.left = c.At(0).Int();
    m.right = c.At(1).Int();
  } else {
    m.left = c.Key("left").Int();
    m.right = c.Key("right").Int();
  }
  if (m.left > m.right) c.Fail("mention has left > right");
  return m;
}

std::vector<Relation> ReadRelations(const JsonCursor& c,
                                    const DatasetConfig& cfg) {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor r = c.At(i);
    out.push_back({Label(r, "type", "relation", cfg),
                   ReadMention(r.Key("subj")), ReadMention(r.Key("obj"))});
  }
  return out;
}

std::vector<DependencyEdge> ReadEdges(const JsonCursor& c,
                                      const DatasetConfig& cfg) {
  std::vector<DependencyEdge> out;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor e = c.At(i);
    out.push_back({e.Key("gov").Int(), e.Key("dep").Int(),
                   Label(e, "rel", "dependency", cfg)});
  }
  return out;
}

std::vector<Event> ReadEvents(const JsonCursor& c, const DatasetConfig& cfg) {
  std::vector<Event> out;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor e = c.At(i);
    JsonCursor t = e.Key("trig");
    Event ev;
    ev.trig = {ReadMention(t.Key("mention")), Label(t, "type", "event", cfg)};
    if (e.Has("args")) {
      JsonCursor args = e.Key("args");
      for (std::size_t k = 0; k < args.Size(); ++k) {
        JsonCursor a = args.At(k);
        ev.args.push_back(
            {ReadMention(a.Key("mention")), Label(a, "role", "role", cfg)});
      }
    }
    out.push_back(std::move(ev));
  }
  return out;
}

Entity ReadEntity(const JsonCursor& c) {
  Entity e;
  std::set<Atom> seen;
  for (std::size_t k = 0; k < c.Size(); ++k) {
    Atom m = c.At(k).ToAtom();
    if (!seen.insert(m).second) {
      c.At(k).Fail("mention " + m.ToString() + " repeated within an entity");
    }
    e.push_back(std::move(m));
  }
  if (e.empty()) c.Fail("entity has no mentions");
  return e;
}

std::vector<Entity> ReadEntities(const JsonCursor& c) {
  std::vector<Entity> out;
  std::set<Atom> seen;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor ec = c.At(i);
    Entity e = ReadEntity(ec);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!seen.insert(e[k]).second) {
        ec.At(k).Fail("mention " + e[k].ToString() +
                      " appears in more than one entity");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RoleFiller> ReadRoleFillers(const JsonCursor& c,
                                        const DatasetConfig& cfg) {
  std::vector<RoleFiller> out;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor a = c.At(i);
    out.push_back({Label(a, "role", "role", cfg), ReadEntity(a.Key("entity"))});
  }
  return out;
}

namespace {

IndexMention ReadIndexMention(const JsonCursor& c) {
  JsonCursor idx = c.json().is_object() ? c.Key("indices") : c;
  IndexMention m;
  for (std::size_t k = 0; k < idx.Size(); ++k) m.indices.push_back(idx.At(k).Int());
  std::sort(m.indices.begin(), m.indices.end());
  m.indices.erase(std::unique(m.indices.begin(), m.indices.end()),
                  m.indices.end());
  if (m.indices.empty()) c.Fail("mention has no indices");
  return m;
}

}  // namespace

std::vector<NAryRelation> ReadNAryRelations(const JsonCursor& c,
                                            const DatasetConfig& cfg,
                                            std::size_t arity) {
  std::vector<NAryRelation> out;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor r = c.At(i);
    NAryRelation rel;
    rel.type = r.Has("type") ? Label(r, "type", "relation", cfg) : "";
    JsonCursor args = r.Key("args");
    if (args.Size() != arity) {
      args.Fail("relation has " + std::to_string(args.Size()) +
                " arguments, expected " + std::to_string(arity));
    }
    for (std::size_t k = 0; k < args.Size(); ++k) {
      JsonCursor a = args.At(k);
      IndexRoleFiller f;
      f.role = Label(a, "role", "role", cfg);
      JsonCursor ms = a.Key("entity");
      for (std::size_t m = 0; m < ms.Size(); ++m) {
        f.mentions.push_back(ReadIndexMention(ms.At(m)));
      }
      if (f.mentions.empty()) ms.Fail("entity has no mentions");
      rel.args.push_back(std::move(f));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<Template> ReadTemplates(const JsonCursor& c,
                                    const DatasetConfig& cfg) {
  std::vector<Template> out;
  for (std::size_t i = 0; i < c.Size(); ++i) {
    JsonCursor t = c.At(i);
    Template tpl;
    tpl.type = Label(t, "type", "template", cfg);
    if (t.Has("fillers")) {
      JsonCursor fs = t.Key("fillers");
      for (std::size_t k = 0; k < fs.Size(); ++k) {
        JsonCursor f = fs.At(k);
        SlotFiller filler;
        filler.slot = Label(f, "slot", "slot", cfg);
        JsonCursor v = f.Key("value");
        SlotKind kind = cfg.KindOf(filler.slot);
        if (v.json().is_string()) {
          filler.values.push_back(v.String());
        } else if (v.json().is_array() && kind == SlotKind::kString) {
          for (std::size_t m = 0; m < v.Size(); ++m) {
            filler.values.push_back(v.At(m).String());
          }
          if (filler.values.empty()) v.Fail("string-fill entity is empty");
        } else {
          v.Fail(std::string(kind == SlotKind::kSet
                                 ? "set-fill slot '"
                                 : "string-fill slot '") +
                 filler.slot + "' expects " +
                 (kind == SlotKind::kSet ? "a label string"
                                         : "a string or list of strings"));
        }
        tpl.fillers.push_back(std::move(filler));
      }
    }
    out.push_back(std::move(tpl));
  }
  return out;
}

AmrGraph ReadAmr(const JsonCursor& c, const DatasetConfig& cfg) {
  JsonCursor props = c.json().is_object() ? c.Key("props") : c;
  std::vector<Prop> out;
  for (std::size_t i = 0; i < props.Size(); ++i) {
    JsonCursor p = props.At(i);
    Prop prop;
    prop.rel = Label(p, "rel", "amr", cfg);
    prop.subj = VarId{p.Key("subj").String()};
    JsonCursor o = p.Key("obj");
    if (o.json().is_string()) {
      prop.obj = VarId{o.String()};
    } else if (o.Has("var")) {
      prop.obj = VarId{o.Key("var").String()};
    } else if (o.Has("concept")) {
      prop.obj = Concept{o.Key("concept").String()};
    } else {
      o.Fail("object must be {\"var\": ...} or {\"concept\": ...}");
    }
    out.push_back(std::move(prop));
  }
  if (c.json().is_object() && c.Has("vars")) {
    JsonCursor vs = c.Key("vars");
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < vs.Size(); ++i) {
      vars.push_back(VarId{vs.At(i).String()});
    }
    try {
      return AmrGraph(std::move(out), std::move(vars));
    } catch (const DataError& e) {
      throw DataError(e.message(), c.path());
    }
  }
  return AmrGraph(std::move(out));
}

}  // namespace structeval::zoo
