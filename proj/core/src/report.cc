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


#include "structeval/report.h"

#include "structeval/errors.h"

namespace structeval {

MetricCounts& MetricCounts::operator+=(const MetricCounts& o) {
  if (factors.empty()) {
    factors.resize(o.factors.size());
    jaccard = o.jaccard;
  }
  if (factors.size() != o.factors.size()) {
    throw PreconditionError("cannot add counts with different factor counts");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) factors[i] += o.factors[i];
  jaccard = jaccard && o.jaccard;
  exact = exact && o.exact;
  return *this;
}

MetricValues ValuesOf(const Tally& t, bool jaccard) {
  MetricValues v;
  v.p = PrecisionOf(t.matched_p, t.pred, t.gold);
  v.r = RecallOf(t.matched_r, t.pred, t.gold);
  v.f = HarmonicMean(v.p, v.r, t.pred == 0.0 && t.gold == 0.0);
  if (jaccard && t.Symmetric()) {
    v.j = Normalize(Normalizer::kJaccard,
                    OverlapTriple{t.matched_p, t.pred, t.gold})
              .value;
  }
  return v;
}

MetricValues ValuesOf(const MetricCounts& c) {
  if (c.factors.size() == 1) return ValuesOf(c.factors[0], c.jaccard);
  MetricValues v{1.0, 1.0, 1.0, std::nullopt};
  for (const Tally& t : c.factors) {
    MetricValues f = ValuesOf(t, false);
    v.p *= f.p;
    v.r *= f.r;
    v.f *= f.f;
  }
  return v;
}

Aggregation ParseAggregation(std::string_view name) {
  if (name == "micro") return Aggregation::kMicro;
  if (name == "macro") return Aggregation::kMacro;
  throw ConfigError("unknown aggregation '" + std::string(name) +
                    "' (expected micro or macro)");
}

const char* AggregationName(Aggregation a) {
  return a == Aggregation::kMicro ? "micro" : "macro";
}

}  // namespace structeval
