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


#ifndef STRUCTEVAL_ORDERED_H_
#define STRUCTEVAL_ORDERED_H_

// Order-preserving matching: weighted LCS for sequences and a 0-1 program
// with monotonicity constraints for partial orders and preorders.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "structeval/bnb.h"
#include "structeval/matcher.h"
#include "structeval/sim.h"

namespace structeval {

enum class OrderKind { kTotal, kPartial, kPreorder };

// "total", "partial", "preorder".
OrderKind ParseOrderKind(std::string_view name);
const char* OrderKindName(OrderKind kind);

// A reflexive-transitively closed relation over item indices [0, n).
class OrderRelation {
 public:
  OrderRelation() = default;
  // List order over n items.
  static OrderRelation Total(int n);
  // Closes `pairs` (i, j meaning item i precedes-or-equals item j). Throws
  // DataError for out-of-range indices, for pairs given with kTotal, and for
  // kPartial relations that are not antisymmetric after closure.
  OrderRelation(int n, OrderKind kind,
                std::span<const std::pair<int, int>> pairs);

  int size() const { return n_; }
  OrderKind kind() const { return kind_; }
  bool Leq(int i, int j) const {
    return leq_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  // The generating pairs, as given (for serialization).
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // Applies a permutation: item i of this relation becomes item perm[i].
  OrderRelation Permuted(std::span<const int> perm) const;

 private:
  int n_ = 0;
  OrderKind kind_ = OrderKind::kTotal;
  std::vector<char> leq_;
  std::vector<std::pair<int, int>> pairs_;
};

template <typename T>
struct OrderedCollection {
  std::vector<T> items;
  OrderRelation order;

  static OrderedCollection Sequence(std::vector<T> items) {
    int n = static_cast<int>(items.size());
    return {std::move(items), OrderRelation::Total(n)};
  }
};

// Default cap on items per side for the graph program.
inline constexpr int kDefaultGraphItemCap = 50;

// Maximum-weight strictly monotone matching over the |P| x |R| grid. Among
// optimal matchings the witness is the lexicographically smallest pair list.
Matching SeqMatchScore(const WeightMatrix& w);

// Maximum-weight matching satisfying, for every two matched pairs (u, v) and
// (u', v'): u <=_P u' iff v <=_R v', plus the cardinality constraint `c`.
// Throws ResourceError when either side exceeds `item_cap` items or the node
// limit is reached.
Matching GraphMatchScore(const WeightMatrix& w, const OrderRelation& pred,
                         const OrderRelation& gold, MatchConstraint c,
                         std::size_t node_limit = kDefaultNodeLimit,
                         int item_cap = kDefaultGraphItemCap);

// True when every two pairs satisfy the monotonicity condition above.
bool IsMonotone(std::span<const std::pair<int, int>> pairs,
                const OrderRelation& pred, const OrderRelation& gold);

template <typename T>
Matching SeqMatchScore(std::span<const T> pred, std::span<const T> gold,
                       const Similarity<T>& inner) {
  return SeqMatchScore(BuildWeights(pred, gold, inner, {}));
}

template <typename T>
Matching GraphMatchScore(const OrderedCollection<T>& pred,
                         const OrderedCollection<T>& gold,
                         const Similarity<T>& inner, MatchConstraint c,
                         std::size_t node_limit = kDefaultNodeLimit,
                         int item_cap = kDefaultGraphItemCap) {
  std::span<const T> pa(pred.items), pb(gold.items);
  return GraphMatchScore(BuildWeights(pa, pb, inner, {}), pred.order,
                         gold.order, c, node_limit, item_cap);
}

// Sequence similarity over vectors: the monotone matching score, optionally
// normalized by the self-scores.
template <typename T>
Similarity<std::vector<T>> SeqMatch(Similarity<T> inner,
                                    std::optional<Normalizer> n,
                                    std::string level = "") {
  bool normalized = n.has_value();
  return Similarity<std::vector<T>>(
      [inner = std::move(inner), n, level = std::move(level)](
          const std::vector<T>& a, const std::vector<T>& b, EvalContext ctx) {
        std::span<const T> pa(a), pb(b);
        WeightMatrix w = BuildWeights(pa, pb, inner, ctx);
        Matching m = SeqMatchScore(w);
        RecordWitness(level, m, w, pa, pb, inner, ctx);
        if (!n) return m.score;
        OverlapTriple t{m.score, SelfScore(pa, inner, ctx),
                        SelfScore(pb, inner, ctx)};
        return Normalize(*n, t).value;
      },
      normalized);
}

struct GraphOptions {
  std::size_t node_limit = kDefaultNodeLimit;
  int item_cap = kDefaultGraphItemCap;
};

template <typename T>
Similarity<OrderedCollection<T>> GraphMatch(Similarity<T> inner,
                                            MatchConstraint c,
                                            std::optional<Normalizer> n,
                                            GraphOptions options = {},
                                            std::string level = "") {
  bool normalized = n.has_value();
  return Similarity<OrderedCollection<T>>(
      [inner = std::move(inner), c, n, options, level = std::move(level)](
          const OrderedCollection<T>& a, const OrderedCollection<T>& b,
          EvalContext ctx) {
        std::span<const T> pa(a.items), pb(b.items);
        WeightMatrix w = BuildWeights(pa, pb, inner, ctx);
        Matching m = GraphMatchScore(w, a.order, b.order, c,
                                     options.node_limit, options.item_cap);
        RecordWitness(level, m, w, pa, pb, inner, ctx);
        if (!n) return m.score;
        OverlapTriple t{m.score, SelfScore(pa, inner, ctx),
                        SelfScore(pb, inner, ctx)};
        return Normalize(*n, t).value;
      },
      normalized);
}

}  // namespace structeval

#endif  // STRUCTEVAL_ORDERED_H_
