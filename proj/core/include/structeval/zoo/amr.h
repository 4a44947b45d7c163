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


#ifndef STRUCTEVAL_ZOO_AMR_H_
#define STRUCTEVAL_ZOO_AMR_H_

#include "structeval/latent.h"
#include "structeval/report.h"

namespace structeval::zoo {

// Smatch counts: matched propositions over proposition counts, maximized
// over one-to-one variable alignments.
MetricCounts SmatchCounts(const AmrGraph& pred, const AmrGraph& gold,
                          const LatentOptions& options, EvalContext ctx = {});

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_AMR_H_
