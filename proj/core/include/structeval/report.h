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


#ifndef STRUCTEVAL_REPORT_H_
#define STRUCTEVAL_REPORT_H_

// Raw counts behind a metric and the values derived from them.

#include <optional>
#include <string>
#include <vector>

#include "structeval/sim.h"

namespace structeval {

// Precision is matched_p / pred and recall is matched_r / gold. For overlap
// metrics matched_p == matched_r == Sigma(P,R), pred == Sigma(P,P) and
// gold == Sigma(R,R).
struct Tally {
  double matched_p = 0.0;
  double matched_r = 0.0;
  double pred = 0.0;
  double gold = 0.0;

  static Tally FromTriple(const OverlapTriple& t) {
    return {t.sigma_pr, t.sigma_pr, t.sigma_pp, t.sigma_rr};
  }
  bool Symmetric() const { return matched_p == matched_r; }
  Tally& operator+=(const Tally& o) {
    matched_p += o.matched_p;
    matched_r += o.matched_r;
    pred += o.pred;
    gold += o.gold;
    return *this;
  }
};

// A metric's counts for one document or a whole corpus. Most metrics have a
// single factor; product metrics multiply the values of several.
struct MetricCounts {
  std::vector<Tally> factors;
  bool jaccard = true;  // false when J is undefined for the metric
  bool exact = true;

  static MetricCounts Single(const OverlapTriple& t) {
    return {{Tally::FromTriple(t)}, true, true};
  }
  // Adds factor-wise. Throws PreconditionError on a factor count mismatch.
  MetricCounts& operator+=(const MetricCounts& o);
};

struct MetricValues {
  double p = 0.0;
  double r = 0.0;
  double f = 0.0;
  std::optional<double> j;
};

MetricValues ValuesOf(const Tally& t, bool jaccard);
MetricValues ValuesOf(const MetricCounts& c);

enum class Aggregation { kMicro, kMacro };
Aggregation ParseAggregation(std::string_view name);
const char* AggregationName(Aggregation a);

}  // namespace structeval

#endif  // STRUCTEVAL_REPORT_H_
