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


#include "structeval/zoo/amr.h"

namespace structeval::zoo {

MetricCounts SmatchCounts(const AmrGraph& pred, const AmrGraph& gold,
                          const LatentOptions& options, EvalContext ctx) {
  SmatchResult r = Smatch(pred, gold, options);
  if (!r.exact) ctx.MarkInexact();
  if (ctx.sink != nullptr) {
    Alignment a;
    a.level = "props";
    a.score = r.triple.sigma_pr;
    a.exact = r.exact;
    for (auto [u, v] : r.prop_pairs) a.pairs.push_back({u, v, 1.0, {}});
    for (const auto& [x, y] : r.alignment.pairs) {
      a.variables.emplace_back(x.name, y.name);
    }
    ctx.sink->push_back(std::move(a));
  }
  MetricCounts c = MetricCounts::Single(r.triple);
  c.exact = r.exact;
  return c;
}

}  // namespace structeval::zoo
