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

#ifndef STRUCTEVAL_MATCHER_H_
#define STRUCTEVAL_MATCHER_H_

// Constrained maximum-weight matching between two finite collections, and
// the set similarity built on top of it.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "structeval/sim.h"

namespace structeval {

enum class MatchConstraint {
  kOneToOne,    // <->  partial bijection
  kManyToOne,   // ->   each predicted item matched at most once
  kOneToMany,   // <-   each reference item matched at most once
  kManyToMany,  // ~    any relation
};

// Accepts "<->", "1:1", "one_to_one", "->", "N:1", "many_to_one", "<-",
// "1:N", "one_to_many", "~", "N:N", "many_to_many".
MatchConstraint ParseConstraint(std::string_view name);
const char* ConstraintName(MatchConstraint c);

// True when each predicted item (row) may appear at most once.
inline bool RowsExclusive(MatchConstraint c) {
  return c == MatchConstraint::kOneToOne || c == MatchConstraint::kManyToOne;
}
inline bool ColsExclusive(MatchConstraint c) {
  return c == MatchConstraint::kOneToOne || c == MatchConstraint::kOneToMany;
}

// Dense |P| x |R| matrix of nonnegative edge weights.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(int rows, int cols);
  static WeightMatrix FromRows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double at(int r, int c) const { return data_[Index(r, c)]; }
  void set(int r, int c, double w);
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct Matching {
  // Sorted by (row, col). Pairs of weight <= kZeroWeight are never listed.
  std::vector<std::pair<int, int>> pairs;
  double score = 0.0;
};

// Maximum total weight over matchings satisfying `c`.
Matching MatchScore(const WeightMatrix& w, MatchConstraint c);

// Maximum-weight assignment on a (possibly rectangular) matrix via the
// Hungarian algorithm with implicit zero padding.
Matching Hungarian(const WeightMatrix& w);

bool SatisfiesConstraint(std::span<const std::pair<int, int>> pairs,
                         MatchConstraint c);

// --- set similarity ----------------------------------------------------------

template <typename T>
WeightMatrix BuildWeights(std::span<const T> pred, std::span<const T> gold,
                          const Similarity<T>& inner, EvalContext ctx) {
  WeightMatrix w(static_cast<int>(pred.size()), static_cast<int>(gold.size()));
  EvalContext quiet = ctx.Quiet();
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < gold.size(); ++j) {
      w.set(static_cast<int>(i), static_cast<int>(j),
            inner.Value(pred[i], gold[j], quiet));
    }
  }
  return w;
}

// Sigma(X, X) computed as the sum of self-similarities. The diagonal matching
// is optimal whenever inner(x, x) >= inner(x, y); for other unnormalized
// similarities this is the definition of the denominator.
template <typename T>
double SelfScore(std::span<const T> items, const Similarity<T>& inner,
                 EvalContext ctx = {}) {
  double total = 0.0;
  EvalContext quiet = ctx.Quiet();
  for (const T& x : items) total += inner.Value(x, x, quiet);
  return total;
}

// Appends the witness for `m` to ctx.sink, re-evaluating each matched pair so
// that nested matchings record their own witnesses.
template <typename T>
void RecordWitness(std::string level, const Matching& m,
                   const WeightMatrix& w, std::span<const T> pred,
                   std::span<const T> gold, const Similarity<T>& inner,
                   EvalContext ctx) {
  if (ctx.sink == nullptr) return;
  Alignment a;
  a.level = std::move(level);
  a.score = m.score;
  a.exact = ctx.exact == nullptr || *ctx.exact;
  for (auto [u, v] : m.pairs) {
    Alignment::Pair p;
    p.pred = u;
    p.gold = v;
    p.weight = w.at(u, v);
    inner.Value(pred[u], gold[v], EvalContext{&p.nested, ctx.exact});
    a.pairs.push_back(std::move(p));
  }
  ctx.sink->push_back(std::move(a));
}

template <typename T>
OverlapTriple Overlap(std::span<const T> pred, std::span<const T> gold,
                      const Similarity<T>& inner, MatchConstraint c,
                      EvalContext ctx = {}, const std::string& level = "") {
  WeightMatrix w = BuildWeights(pred, gold, inner, ctx);
  Matching m = MatchScore(w, c);
  RecordWitness(level, m, w, pred, gold, inner, ctx);
  return OverlapTriple{m.score, SelfScore(pred, inner, ctx),
                       SelfScore(gold, inner, ctx)};
}

// set_similarity: unnormalized Sigma when `n` is empty, else the normalized
// score from {Sigma(P,R), Sigma(P,P), Sigma(R,R)}.
template <typename T>
SimScore SetSimilarity(std::span<const T> pred, std::span<const T> gold,
                       const Similarity<T>& inner, MatchConstraint c,
                       std::optional<Normalizer> n = std::nullopt) {
  if (!n) {
    WeightMatrix w = BuildWeights(pred, gold, inner, {});
    return {MatchScore(w, c).score, false};
  }
  return Normalize(*n, Overlap(pred, gold, inner, c));
}

// The set similarity as a composable similarity over vectors.
template <typename T>
Similarity<std::vector<T>> SetMatch(Similarity<T> inner, MatchConstraint c,
                                    std::optional<Normalizer> n,
                                    std::string level = "") {
  bool normalized = n.has_value();
  return Similarity<std::vector<T>>(
      [inner = std::move(inner), c, n, level = std::move(level)](
          const std::vector<T>& a, const std::vector<T>& b, EvalContext ctx) {
        std::span<const T> pa(a), pb(b);
        WeightMatrix w = BuildWeights(pa, pb, inner, ctx);
        Matching m = MatchScore(w, c);
        RecordWitness(level, m, w, pa, pb, inner, ctx);
        if (!n) return m.score;
        OverlapTriple t{m.score, SelfScore(pa, inner, ctx),
                        SelfScore(pb, inner, ctx)};
        return Normalize(*n, t).value;
      },
      normalized);
}

}  // namespace structeval

#endif  // STRUCTEVAL_MATCHER_H_
