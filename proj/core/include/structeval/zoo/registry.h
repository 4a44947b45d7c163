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


#ifndef STRUCTEVAL_ZOO_REGISTRY_H_
#define STRUCTEVAL_ZOO_REGISTRY_H_

// Named access to every zoo metric, evaluated directly on payload JSON.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "structeval/latent.h"
#include "structeval/report.h"
#include "structeval/zoo/config.h"
#include "structeval/zoo/json_reader.h"

namespace structeval::zoo {

struct ZooContext {
  const DatasetConfig* config = nullptr;  // null means an empty config
  LatentOptions latent;
};

struct ZooMetric {
  std::string name;
  std::string summary;
  std::string payload;  // shape of one document's payload
  std::function<MetricCounts(const JsonCursor& pred, const JsonCursor& gold,
                             const ZooContext& zc, EvalContext ctx)>
      evaluate;
};

// In listing order.
const std::vector<ZooMetric>& ZooMetrics();
// Null when unknown.
const ZooMetric* FindZooMetric(std::string_view name);

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_REGISTRY_H_
