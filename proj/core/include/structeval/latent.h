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

#ifndef STRUCTEVAL_LATENT_H_
#define STRUCTEVAL_LATENT_H_

// Matching of collections whose items mention latent variables. The variable
// correspondence (a partial bijection) is optimized jointly with the item
// matching through a 0-1 program: item pair (u, v) may only be matched if
// every latent field of u is aligned with the same field of v.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "structeval/bnb.h"
#include "structeval/matcher.h"
#include "structeval/sim.h"

namespace structeval {

// An opaque variable name, scoped to one side of the comparison.
struct VarId {
  std::string name;
  bool operator==(const VarId&) const = default;
  auto operator<=>(const VarId&) const = default;
};

struct Concept {
  std::string label;
  bool operator==(const Concept&) const = default;
  auto operator<=>(const Concept&) const = default;
};

// The value of a latent field: a variable awaiting alignment or a constant.
struct LatentSlot {
  bool is_var = true;
  std::string name;
  bool operator==(const LatentSlot&) const = default;
  auto operator<=>(const LatentSlot&) const = default;
};

// Similarity of two slots assuming any variables involved are aligned:
// variable/variable scores 1, constant/constant compares labels, a variable
// never matches a constant.
Similarity<LatentSlot> ConditionedSlotSim();

// --- AMR ---------------------------------------------------------------------

struct Prop {
  std::string rel;
  VarId subj;
  std::variant<VarId, Concept> obj;

  LatentSlot SubjSlot() const { return {true, subj.name}; }
  LatentSlot ObjSlot() const;
};

class AmrGraph {
 public:
  AmrGraph() = default;
  // Variables are collected from the propositions.
  explicit AmrGraph(std::vector<Prop> props);
  // Throws DataError if a proposition uses a variable not listed in `vars`.
  AmrGraph(std::vector<Prop> props, std::vector<VarId> vars);

  const std::vector<Prop>& props() const { return props_; }
  const std::vector<VarId>& vars() const { return vars_; }

 private:
  std::vector<Prop> props_;
  std::vector<VarId> vars_;
};

// --- 0-1 program -------------------------------------------------------------

enum class SolverMode { kExact, kHillClimb };
SolverMode ParseSolverMode(std::string_view name);

struct LatentOptions {
  SolverMode mode = SolverMode::kExact;
  std::uint64_t seed = 0;
  std::size_t node_limit = kDefaultNodeLimit;
  int restarts = 8;
};

// Latent fields of one item, in field order.
struct LatentItem {
  std::vector<LatentSlot> slots;
};

struct IlpInstance {
  struct ItemVar {
    int pred = 0;
    int gold = 0;
    double coeff = 0.0;           // upper-bound similarity of the pair
    std::vector<int> var_links;   // var_vars indices the pair depends on
  };
  struct VarVar {
    int pred_var = 0;
    int gold_var = 0;
  };

  int pred_items = 0;
  int gold_items = 0;
  MatchConstraint constraint = MatchConstraint::kOneToOne;
  std::vector<std::string> pred_vars;
  std::vector<std::string> gold_vars;
  std::vector<ItemVar> item_vars;
  // One per (pred variable, gold variable), row-major.
  std::vector<VarVar> var_vars;
  // Over program variables: item_vars first, then var_vars.
  std::vector<LinearConstraint> constraints;

  int VarVarIndex(int x, int y) const {
    return x * static_cast<int>(gold_vars.size()) + y;
  }
  int ProgramIndexOfVarVar(int k) const {
    return static_cast<int>(item_vars.size()) + k;
  }
  BinaryProgram ToProgram() const;
};

// `upper` holds the conditioned similarity of every item pair. Pairs with
// zero weight, or whose latent fields pair a variable with a constant, are
// pruned.
IlpInstance BuildIlp(const WeightMatrix& upper,
                     std::span<const LatentItem> pred,
                     std::span<const LatentItem> gold, MatchConstraint c);

struct VarAlignment {
  std::vector<std::pair<VarId, VarId>> pairs;
};

struct IlpSolution {
  double score = 0.0;
  std::vector<std::pair<int, int>> item_pairs;
  VarAlignment alignment;
  bool exact = true;
  std::size_t nodes = 0;
};

// Exact mode proves optimality (or throws ResourceError at the node limit);
// hill-climb mode returns a feasible lower bound flagged non-exact.
IlpSolution SolveIlp(const IlpInstance& inst, const LatentOptions& options);

// Best item matching once the variable alignment is fixed. `assign[x]` is the
// gold variable aligned with predicted variable x, or -1.
Matching ScoreUnderAlignment(const IlpInstance& inst,
                             const std::vector<int>& assign);

// --- generic latent set matching ---------------------------------------------

template <typename T>
struct LatentField {
  std::string name;
  std::function<LatentSlot(const T&)> get;
};

template <typename T>
std::vector<LatentItem> ExtractLatent(std::span<const T> items,
                                      const std::vector<LatentField<T>>& f) {
  std::vector<LatentItem> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& field : f) out[i].slots.push_back(field.get(items[i]));
  }
  return out;
}

template <typename T>
IlpInstance BuildIlp(std::span<const T> pred, std::span<const T> gold,
                     const Similarity<T>& upper,
                     const std::vector<LatentField<T>>& fields,
                     MatchConstraint c, EvalContext ctx = {}) {
  WeightMatrix w = BuildWeights(pred, gold, upper, ctx);
  auto lp = ExtractLatent(pred, fields);
  auto lg = ExtractLatent(gold, fields);
  return BuildIlp(w, lp, lg, c);
}

void AppendVariableWitness(const IlpSolution& sol, Alignment& a);

// Solves the latent matching of `pred` against `gold` and returns the
// overlap triple, recording the witness (with the variable alignment) into
// ctx.sink.
template <typename T>
OverlapTriple LatentOverlap(std::span<const T> pred, std::span<const T> gold,
                            const Similarity<T>& upper,
                            const std::vector<LatentField<T>>& fields,
                            MatchConstraint c, const LatentOptions& options,
                            EvalContext ctx, const std::string& level) {
  IlpInstance inst = BuildIlp(pred, gold, upper, fields, c, ctx);
  IlpSolution sol = SolveIlp(inst, options);
  if (!sol.exact) ctx.MarkInexact();
  if (ctx.sink != nullptr) {
    Alignment al;
    al.level = level;
    al.score = sol.score;
    al.exact = sol.exact;
    for (auto [u, v] : sol.item_pairs) {
      Alignment::Pair p;
      p.pred = u;
      p.gold = v;
      p.weight =
          upper.Value(pred[u], gold[v], EvalContext{&p.nested, ctx.exact});
      al.pairs.push_back(std::move(p));
    }
    AppendVariableWitness(sol, al);
    ctx.sink->push_back(std::move(al));
  }
  return OverlapTriple{sol.score, SelfScore(pred, upper, ctx),
                       SelfScore(gold, upper, ctx)};
}

template <typename T>
Similarity<std::vector<T>> LatentSetMatch(Similarity<T> upper,
                                          std::vector<LatentField<T>> fields,
                                          MatchConstraint c,
                                          std::optional<Normalizer> n,
                                          LatentOptions options,
                                          std::string level = "") {
  bool normalized = n.has_value();
  return Similarity<std::vector<T>>(
      [upper = std::move(upper), fields = std::move(fields), c, n, options,
       level = std::move(level)](const std::vector<T>& a,
                                 const std::vector<T>& b, EvalContext ctx) {
        OverlapTriple t =
            LatentOverlap(std::span<const T>(a), std::span<const T>(b), upper,
                          fields, c, options, ctx, level);
        if (!n) return t.sigma_pr;
        return Normalize(*n, t).value;
      },
      normalized);
}

// --- Smatch ------------------------------------------------------------------

struct SmatchResult {
  OverlapTriple triple;  // matched props, |pred props|, |gold props|
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  std::vector<std::pair<int, int>> prop_pairs;
  VarAlignment alignment;
  bool exact = true;
};

// The conditioned proposition similarity: relation label equality times the
// conditioned similarity of subject and object.
Similarity<Prop> ConditionedPropSim();
std::vector<LatentField<Prop>> PropLatentFields();

SmatchResult Smatch(const AmrGraph& pred, const AmrGraph& gold,
                    const LatentOptions& options = {});

}  // namespace structeval

#endif  // STRUCTEVAL_LATENT_H_
