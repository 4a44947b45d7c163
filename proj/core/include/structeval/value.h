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


#ifndef STRUCTEVAL_VALUE_H_
#define STRUCTEVAL_VALUE_H_

// Dynamically typed document values used by schema-derived evaluators.

#include <memory>
#include <string>
#include <vector>

#include "structeval/latent.h"
#include "structeval/ordered.h"
#include "structeval/sim.h"

namespace structeval {

struct Value {
  enum class Kind { kAtom, kSlot, kRecord, kList, kGraph };

  Kind kind = Kind::kAtom;
  Atom atom;
  LatentSlot slot;
  // Record fields in declaration order, or collection elements.
  std::vector<Value> children;
  // Graph collections only.
  std::shared_ptr<const OrderRelation> order;

  static Value OfAtom(Atom a) {
    Value v;
    v.kind = Kind::kAtom;
    v.atom = std::move(a);
    return v;
  }
  static Value OfSlot(LatentSlot s) {
    Value v;
    v.kind = Kind::kSlot;
    v.slot = std::move(s);
    return v;
  }
  static Value Record(std::vector<Value> fields) {
    Value v;
    v.kind = Kind::kRecord;
    v.children = std::move(fields);
    return v;
  }
  static Value List(std::vector<Value> items) {
    Value v;
    v.kind = Kind::kList;
    v.children = std::move(items);
    return v;
  }
  static Value Graph(std::vector<Value> items, OrderRelation order) {
    Value v;
    v.kind = Kind::kGraph;
    v.children = std::move(items);
    v.order = std::make_shared<const OrderRelation>(std::move(order));
    return v;
  }
};

const char* ValueKindName(Value::Kind kind);

}  // namespace structeval

#endif  // STRUCTEVAL_VALUE_H_
