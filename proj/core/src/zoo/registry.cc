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


#include "structeval/zoo/registry.h"

#include <algorithm>

#include "structeval/zoo/amr.h"
#include "structeval/zoo/basic.h"
#include "structeval/zoo/coref.h"
#include "structeval/zoo/hierarchy.h"
#include "structeval/zoo/nary.h"
#include "structeval/zoo/records.h"
#include "structeval/zoo/templates.h"

namespace structeval::zoo {

namespace {

const DatasetConfig& ConfigOf(const ZooContext& zc) {
  static const DatasetConfig kEmpty;
  return zc.config != nullptr ? *zc.config : kEmpty;
}

// Wraps a typed metric: reads both payloads with `read`, then scores.
template <typename Read, typename Score>
ZooMetric Make(std::string name, std::string summary, std::string payload,
               Read read, Score score) {
  return ZooMetric{
      std::move(name), std::move(summary), std::move(payload),
      [read, score](const JsonCursor& p, const JsonCursor& g,
                    const ZooContext& zc, EvalContext ctx) {
        const DatasetConfig& cfg = ConfigOf(zc);
        auto pv = read(p, cfg);
        auto gv = read(g, cfg);
        return score(pv, gv, zc, ctx);
      }};
}

auto ReadRel = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadRelations(c, cfg);
};
auto ReadDep = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadEdges(c, cfg);
};
auto ReadEv = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadEvents(c, cfg);
};
auto ReadEnt = [](const JsonCursor& c, const DatasetConfig&) {
  return ReadEntities(c);
};
auto ReadRf = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadRoleFillers(c, cfg);
};
auto ReadSci = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadNAryRelations(c, cfg, 4);
};
auto ReadTpl = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadTemplates(c, cfg);
};
auto ReadAmrGraph = [](const JsonCursor& c, const DatasetConfig& cfg) {
  return ReadAmr(c, cfg);
};
auto ReadPath = [](const JsonCursor& c, const DatasetConfig&) {
  JsonCursor p = c.Key("path");
  TypePath out;
  for (std::size_t i = 0; i < p.Size(); ++i) out.push_back(p.At(i).String());
  return out;
};
auto ReadLabels = [](const JsonCursor& c, const DatasetConfig& cfg) {
  JsonCursor p = c.Key("labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.Size(); ++i) {
    out.push_back(p.At(i).String());
    if (!cfg.ontology.Contains(out.back())) {
      p.At(i).Fail("label '" + out.back() + "' is not in the ontology");
    }
  }
  return out;
};

template <typename Fn>
auto Plain(Fn fn) {
  return [fn](const auto& p, const auto& g, const ZooContext&,
              EvalContext ctx) {
    using T = typename std::decay_t<decltype(p)>::value_type;
    return fn(std::span<const T>(p), std::span<const T>(g), ctx);
  };
}

template <typename Fn>
auto WithConfig(Fn fn) {
  return [fn](const auto& p, const auto& g, const ZooContext& zc,
              EvalContext ctx) {
    using T = typename std::decay_t<decltype(p)>::value_type;
    return fn(std::span<const T>(p), std::span<const T>(g), ConfigOf(zc), ctx);
  };
}

const char kRelPayload[] =
    "[{\"type\": str, \"subj\": {\"left\": int, \"right\": int}, "
    "\"obj\": {\"left\": int, \"right\": int}}, ...]";
const char kDepPayload[] =
    "[{\"gov\": int, \"dep\": int, \"rel\": str}, ...]";
const char kEventPayload[] =
    "[{\"trig\": {\"mention\": {\"left\": int, \"right\": int}, \"type\": "
    "str}, \"args\": [{\"mention\": {...}, \"role\": str}, ...]}, ...]";
const char kCorefPayload[] =
    "[[mention, ...], ...]  (entities; a mention is a string, an int or "
    "[left, right])";
const char kReePayload[] =
    "[{\"role\": str, \"entity\": [mention, ...]}, ...]";
const char kScirexPayload[] =
    "[{\"type\": str, \"args\": [{\"role\": str, \"entity\": [{\"indices\": "
    "[int, ...]}, ...]} x4]}, ...]";
const char kTemplatePayload[] =
    "[{\"type\": str, \"fillers\": [{\"slot\": str, \"value\": str | [str, "
    "...]}, ...]}, ...]  (slot kinds from --config)";
const char kAmrPayload[] =
    "[{\"rel\": str, \"subj\": var, \"obj\": {\"var\": str} | {\"concept\": "
    "str}}, ...]";

std::vector<ZooMetric> Build() {
  std::vector<ZooMetric> m;
  m.push_back(Make("rel_f1", "binary relation extraction F1", kRelPayload,
                   ReadRel, Plain([](auto p, auto g, EvalContext c) {
                     return RelF1(p, g, c);
                   })));
  m.push_back(Make("uas", "unlabeled attachment score", kDepPayload, ReadDep,
                   Plain([](auto p, auto g, EvalContext c) {
                     return Uas(p, g, c);
                   })));
  m.push_back(Make("las", "labeled attachment score", kDepPayload, ReadDep,
                   Plain([](auto p, auto g, EvalContext c) {
                     return Las(p, g, c);
                   })));
  m.push_back(Make("trig_f1", "event trigger F1", kEventPayload, ReadEv,
                   Plain([](auto p, auto g, EvalContext c) {
                     return TrigF1(p, g, c);
                   })));
  m.push_back(Make("arg_f1", "event argument F1 (nested matching)",
                   kEventPayload, ReadEv,
                   Plain([](auto p, auto g, EvalContext c) {
                     return ArgF1(p, g, c);
                   })));
  m.push_back(Make("muc", "MUC link-based coreference score", kCorefPayload,
                   ReadEnt, Plain([](auto p, auto g, EvalContext c) {
                     return Muc(p, g, c);
                   })));
  m.push_back(Make("b3", "B-cubed mention-based coreference score",
                   kCorefPayload, ReadEnt,
                   Plain([](auto p, auto g, EvalContext c) {
                     return B3(p, g, c);
                   })));
  m.push_back(Make("ceaf_phi3", "CEAF with shared-mention-count similarity",
                   kCorefPayload, ReadEnt,
                   Plain([](auto p, auto g, EvalContext c) {
                     return CeafPhi3(p, g, c);
                   })));
  m.push_back(Make("ceaf_phi4", "CEAF with F-normalized entity similarity",
                   kCorefPayload, ReadEnt,
                   Plain([](auto p, auto g, EvalContext c) {
                     return CeafPhi4(p, g, c);
                   })));
  m.push_back(Make("ceaf_ree", "role-filler entity CEAF (subset similarity)",
                   kReePayload, ReadRf,
                   Plain([](auto p, auto g, EvalContext c) {
                     return CeafRee(p, g, c);
                   })));
  m.push_back(Make("ceaf_rme_subset",
                   "one-sided role-filler mention CEAF (subset similarity)",
                   kReePayload, ReadRf,
                   Plain([](auto p, auto g, EvalContext c) {
                     return CeafRmeSubset(p, g, c);
                   })));
  m.push_back(Make("ceaf_rme_phi3",
                   "one-sided role-filler mention CEAF (shared mentions)",
                   kReePayload, ReadRf,
                   Plain([](auto p, auto g, EvalContext c) {
                     return CeafRmePhi3(p, g, c);
                   })));
  m.push_back(Make("scirex", "4-ary relation F1 with thresholded entities",
                   kScirexPayload, ReadSci,
                   Plain([](auto p, auto g, EvalContext c) {
                     return Scirex(p, g, c);
                   })));
  m.push_back(Make("muc4", "MUC-4 slot-filler F1 over aligned templates",
                   kTemplatePayload, ReadTpl,
                   WithConfig([](auto p, auto g, const DatasetConfig& cfg,
                                 EvalContext c) {
                     return Muc4(p, g, cfg, c);
                   })));
  m.push_back(Make("better_granular",
                   "template type F1 times slot-filler F1", kTemplatePayload,
                   ReadTpl,
                   WithConfig([](auto p, auto g, const DatasetConfig& cfg,
                                 EvalContext c) {
                     return BetterGranular(p, g, cfg, c);
                   })));
  m.push_back(Make("smatch", "AMR proposition F1 under the best variable "
                   "alignment", kAmrPayload, ReadAmrGraph,
                   [](const AmrGraph& p, const AmrGraph& g,
                      const ZooContext& zc, EvalContext c) {
                     return SmatchCounts(p, g, zc.latent, c);
                   }));
  m.push_back(Make("type_level", "level-based hierarchical type similarity",
                   "{\"path\": [str, ...]}  (most general first)", ReadPath,
                   [](const TypePath& p, const TypePath& g, const ZooContext&,
                      EvalContext) {
                     double s = TypeSimilarityLevel(p, g).value;
                     MetricCounts c;
                     c.factors.push_back({s, s, 1.0, 1.0});
                     return c;
                   }));
  m.push_back(Make(
      "type_supertypes", "F1 between supertype closures of predicted labels",
      "{\"labels\": [str, ...]}  (ontology from --config)", ReadLabels,
      [](const std::vector<std::string>& p, const std::vector<std::string>& g,
         const ZooContext& zc, EvalContext) {
        const Ontology& o = ConfigOf(zc).ontology;
        auto sp = Supertypes(p, o);
        auto sg = Supertypes(g, o);
        double common = 0.0;
        for (const auto& l : sp) {
          if (std::find(sg.begin(), sg.end(), l) != sg.end()) common += 1.0;
        }
        return MetricCounts::Single({common, static_cast<double>(sp.size()),
                                     static_cast<double>(sg.size())});
      }));
  return m;
}

}  // namespace

const std::vector<ZooMetric>& ZooMetrics() {
  static const std::vector<ZooMetric> kMetrics = Build();
  return kMetrics;
}

const ZooMetric* FindZooMetric(std::string_view name) {
  for (const auto& m : ZooMetrics()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace structeval::zoo
