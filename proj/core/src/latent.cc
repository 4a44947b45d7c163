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

#include "structeval/latent.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace structeval {

Similarity<LatentSlot> ConditionedSlotSim() {
  return Similarity<LatentSlot>(
      [](const LatentSlot& a, const LatentSlot& b, EvalContext) {
        if (a.is_var != b.is_var) return 0.0;
        if (a.is_var) return 1.0;
        return a.name == b.name ? 1.0 : 0.0;
      },
      true);
}

LatentSlot Prop::ObjSlot() const {
  if (const auto* v = std::get_if<VarId>(&obj)) return {true, v->name};
  return {false, std::get<Concept>(obj).label};
}

AmrGraph::AmrGraph(std::vector<Prop> props) : props_(std::move(props)) {
  std::set<std::string> seen;
  auto add = [&](const std::string& name) {
    if (seen.insert(name).second) vars_.push_back(VarId{name});
  };
  for (const Prop& p : props_) {
    add(p.subj.name);
    if (const auto* v = std::get_if<VarId>(&p.obj)) add(v->name);
  }
}

AmrGraph::AmrGraph(std::vector<Prop> props, std::vector<VarId> vars)
    : props_(std::move(props)), vars_(std::move(vars)) {
  std::set<std::string> declared;
  for (const VarId& v : vars_) {
    if (!declared.insert(v.name).second) {
      throw DataError("duplicate variable '" + v.name + "'");
    }
  }
  auto check = [&](const std::string& name) {
    if (!declared.count(name)) {
      throw DataError("proposition uses undeclared variable '" + name + "'");
    }
  };
  for (const Prop& p : props_) {
    check(p.subj.name);
    if (const auto* v = std::get_if<VarId>(&p.obj)) check(v->name);
  }
}

SolverMode ParseSolverMode(std::string_view name) {
  if (name == "exact") return SolverMode::kExact;
  if (name == "hillclimb" || name == "hill-climb") return SolverMode::kHillClimb;
  throw ConfigError("unknown solver mode '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> CollectVars(std::span<const LatentItem> items) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& item : items) {
    for (const auto& s : item.slots) {
      if (s.is_var && seen.insert(s.name).second) out.push_back(s.name);
    }
  }
  return out;
}

std::map<std::string, int> IndexOf(const std::vector<std::string>& names) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    idx[names[i]] = static_cast<int>(i);
  }
  return idx;
}

}  // namespace

IlpInstance BuildIlp(const WeightMatrix& upper,
                     std::span<const LatentItem> pred,
                     std::span<const LatentItem> gold, MatchConstraint c) {
  if (upper.rows() != static_cast<int>(pred.size()) ||
      upper.cols() != static_cast<int>(gold.size())) {
    throw PreconditionError("weight matrix does not match item counts");
  }
  IlpInstance inst;
  inst.pred_items = static_cast<int>(pred.size());
  inst.gold_items = static_cast<int>(gold.size());
  inst.constraint = c;
  inst.pred_vars = CollectVars(pred);
  inst.gold_vars = CollectVars(gold);
  const auto pidx = IndexOf(inst.pred_vars);
  const auto gidx = IndexOf(inst.gold_vars);
  const int nvp = static_cast<int>(inst.pred_vars.size());
  const int nvg = static_cast<int>(inst.gold_vars.size());
  for (int x = 0; x < nvp; ++x) {
    for (int y = 0; y < nvg; ++y) inst.var_vars.push_back({x, y});
  }

  for (int u = 0; u < inst.pred_items; ++u) {
    for (int v = 0; v < inst.gold_items; ++v) {
      double coeff = upper.at(u, v);
      if (coeff <= kZeroWeight) continue;
      const auto& a = pred[u].slots;
      const auto& b = gold[v].slots;
      if (a.size() != b.size()) {
        throw SchemaError("latent field count differs between items");
      }
      bool viable = true;
      std::vector<int> links;
      for (std::size_t f = 0; f < a.size() && viable; ++f) {
        if (a[f].is_var != b[f].is_var) {
          viable = false;
        } else if (a[f].is_var) {
          int k = inst.VarVarIndex(pidx.at(a[f].name), gidx.at(b[f].name));
          if (std::find(links.begin(), links.end(), k) == links.end()) {
            links.push_back(k);
          }
        }
      }
      if (!viable) continue;
      inst.item_vars.push_back({u, v, coeff, std::move(links)});
    }
  }

  // m_uv <= m~_xy for every latent field.
  for (std::size_t i = 0; i < inst.item_vars.size(); ++i) {
    for (int k : inst.item_vars[i].var_links) {
      inst.constraints.push_back(
          {{static_cast<int>(i), inst.ProgramIndexOfVarVar(k)}, {1, -1}, 0});
    }
  }
  // Variables align one-to-one.
  for (int x = 0; x < nvp; ++x) {
    LinearConstraint lc{{}, {}, 1};
    for (int y = 0; y < nvg; ++y) {
      lc.vars.push_back(inst.ProgramIndexOfVarVar(inst.VarVarIndex(x, y)));
      lc.coefs.push_back(1);
    }
    if (lc.vars.size() > 1) inst.constraints.push_back(std::move(lc));
  }
  for (int y = 0; y < nvg; ++y) {
    LinearConstraint lc{{}, {}, 1};
    for (int x = 0; x < nvp; ++x) {
      lc.vars.push_back(inst.ProgramIndexOfVarVar(inst.VarVarIndex(x, y)));
      lc.coefs.push_back(1);
    }
    if (lc.vars.size() > 1) inst.constraints.push_back(std::move(lc));
  }
  // Optional item constraints.
  auto group_items = [&](bool by_row) {
    std::map<int, LinearConstraint> groups;
    for (std::size_t i = 0; i < inst.item_vars.size(); ++i) {
      int key = by_row ? inst.item_vars[i].pred : inst.item_vars[i].gold;
      auto& lc = groups[key];
      lc.rhs = 1;
      lc.vars.push_back(static_cast<int>(i));
      lc.coefs.push_back(1);
    }
    for (auto& [key, lc] : groups) inst.constraints.push_back(std::move(lc));
  };
  if (RowsExclusive(c)) group_items(true);
  if (ColsExclusive(c)) group_items(false);
  return inst;
}

BinaryProgram IlpInstance::ToProgram() const {
  BinaryProgram p;
  for (const auto& iv : item_vars) {
    int id = p.AddVar(iv.coeff);
    if (RowsExclusive(constraint)) p.row_group[id] = iv.pred;
    if (ColsExclusive(constraint)) p.col_group[id] = iv.gold;
  }
  std::vector<double> potential(var_vars.size(), 0.0);
  for (const auto& iv : item_vars) {
    for (int k : iv.var_links) potential[k] += iv.coeff;
  }
  for (std::size_t k = 0; k < var_vars.size(); ++k) p.AddVar(0.0);
  p.constraints = constraints;
  std::vector<int> useful;
  for (std::size_t k = 0; k < var_vars.size(); ++k) {
    if (potential[k] > 0.0) useful.push_back(static_cast<int>(k));
  }
  std::stable_sort(useful.begin(), useful.end(), [&](int a, int b) {
    return potential[a] > potential[b];
  });
  for (int k : useful) p.branch_first.push_back(ProgramIndexOfVarVar(k));
  return p;
}

Matching ScoreUnderAlignment(const IlpInstance& inst,
                             const std::vector<int>& assign) {
  WeightMatrix w(inst.pred_items, inst.gold_items);
  const int nvg = static_cast<int>(inst.gold_vars.size());
  for (const auto& iv : inst.item_vars) {
    bool ok = true;
    for (int k : iv.var_links) {
      int x = k / nvg;
      int y = k % nvg;
      if (assign[x] != y) {
        ok = false;
        break;
      }
    }
    if (ok) w.set(iv.pred, iv.gold, iv.coeff);
  }
  return MatchScore(w, inst.constraint);
}

namespace {

VarAlignment AlignmentFromAssign(const IlpInstance& inst,
                                 const std::vector<int>& assign) {
  VarAlignment va;
  for (std::size_t x = 0; x < assign.size(); ++x) {
    if (assign[x] >= 0) {
      va.pairs.push_back(
          {VarId{inst.pred_vars[x]}, VarId{inst.gold_vars[assign[x]]}});
    }
  }
  return va;
}

IlpSolution SolveExact(const IlpInstance& inst, const LatentOptions& options) {
  BinaryProgram program = inst.ToProgram();
  BnbResult r = SolveBinaryProgram(program, options.node_limit);
  std::vector<int> assign(inst.pred_vars.size(), -1);
  for (std::size_t k = 0; k < inst.var_vars.size(); ++k) {
    if (r.assignment[inst.ProgramIndexOfVarVar(static_cast<int>(k))]) {
      assign[inst.var_vars[k].pred_var] = inst.var_vars[k].gold_var;
    }
  }
  IlpSolution sol;
  sol.score = r.objective;
  sol.item_pairs = ScoreUnderAlignment(inst, assign).pairs;
  sol.alignment = AlignmentFromAssign(inst, assign);
  sol.exact = true;
  sol.nodes = r.nodes;
  return sol;
}

// Random-restart steepest ascent over variable alignments. Moves reassign one
// predicted variable (to an unused gold variable or to nothing) or swap the
// targets of two predicted variables.
class HillClimber {
 public:
  HillClimber(const IlpInstance& inst, const LatentOptions& options)
      : inst_(inst),
        options_(options),
        rng_(options.seed),
        nvp_(static_cast<int>(inst.pred_vars.size())),
        nvg_(static_cast<int>(inst.gold_vars.size())) {}

  IlpSolution Run() {
    std::vector<int> best_assign(nvp_, -1);
    double best = ScoreUnderAlignment(inst_, best_assign).score;
    const int restarts = std::max(1, options_.restarts);
    for (int r = 0; r < restarts; ++r) {
      std::vector<int> assign = r == 0 ? GreedyStart() : RandomStart();
      double score = Climb(assign);
      if (score > best + kZeroWeight) {
        best = score;
        best_assign = assign;
      }
    }
    IlpSolution sol;
    Matching m = ScoreUnderAlignment(inst_, best_assign);
    sol.score = m.score;
    sol.item_pairs = m.pairs;
    sol.alignment = AlignmentFromAssign(inst_, best_assign);
    sol.exact = false;
    return sol;
  }

 private:
  std::vector<int> GreedyStart() const {
    std::vector<int> assign(nvp_, -1);
    std::vector<int> owner(nvg_, -1);
    std::vector<int> order(inst_.item_vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return inst_.item_vars[a].coeff > inst_.item_vars[b].coeff;
    });
    for (int i : order) {
      const auto& links = inst_.item_vars[i].var_links;
      std::vector<int> next = assign, next_owner = owner;
      bool ok = true;
      for (int k : links) {
        int x = k / nvg_, y = k % nvg_;
        if (next[x] == y) continue;
        if (next[x] != -1 || next_owner[y] != -1) {
          ok = false;
          break;
        }
        next[x] = y;
        next_owner[y] = x;
      }
      if (!ok) continue;
      assign = std::move(next);
      owner = std::move(next_owner);
    }
    return assign;
  }

  std::vector<int> RandomStart() {
    std::vector<int> targets(std::max(nvp_, nvg_));
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng_);
    std::vector<int> assign(nvp_, -1);
    for (int x = 0; x < nvp_; ++x) {
      assign[x] = targets[x] < nvg_ ? targets[x] : -1;
    }
    return assign;
  }

  double Climb(std::vector<int>& assign) const {
    double current = ScoreUnderAlignment(inst_, assign).score;
    while (true) {
      double best = current;
      std::vector<int> best_assign;
      for (int x = 0; x < nvp_; ++x) {
        for (int y = -1; y < nvg_; ++y) {
          if (assign[x] == y) continue;
          std::vector<int> cand = assign;
          if (y >= 0) {
            auto it = std::find(cand.begin(), cand.end(), y);
            if (it != cand.end()) *it = cand[x];
          }
          cand[x] = y;
          double s = ScoreUnderAlignment(inst_, cand).score;
          if (s > best + kZeroWeight) {
            best = s;
            best_assign = std::move(cand);
          }
        }
      }
      if (best_assign.empty()) return current;
      assign = std::move(best_assign);
      current = best;
    }
  }

  const IlpInstance& inst_;
  const LatentOptions& options_;
  std::mt19937_64 rng_;
  int nvp_;
  int nvg_;
};

}  // namespace

IlpSolution SolveIlp(const IlpInstance& inst, const LatentOptions& options) {
  if (options.mode == SolverMode::kExact) return SolveExact(inst, options);
  return HillClimber(inst, options).Run();
}

void AppendVariableWitness(const IlpSolution& sol, Alignment& a) {
  for (const auto& [x, y] : sol.alignment.pairs) {
    a.variables.emplace_back(x.name, y.name);
  }
}

Similarity<Prop> ConditionedPropSim() {
  auto slot = ConditionedSlotSim();
  return Product<Prop>({
      Field(&Prop::rel, Discrete<std::string>()),
      Project<Prop, LatentSlot>([](const Prop& p) { return p.SubjSlot(); },
                                slot),
      Project<Prop, LatentSlot>([](const Prop& p) { return p.ObjSlot(); },
                                slot),
  });
}

std::vector<LatentField<Prop>> PropLatentFields() {
  return {
      {"subj", [](const Prop& p) { return p.SubjSlot(); }},
      {"obj", [](const Prop& p) { return p.ObjSlot(); }},
  };
}

SmatchResult Smatch(const AmrGraph& pred, const AmrGraph& gold,
                    const LatentOptions& options) {
  std::span<const Prop> p(pred.props()), g(gold.props());
  IlpInstance inst = BuildIlp(p, g, ConditionedPropSim(), PropLatentFields(),
                              MatchConstraint::kOneToOne);
  IlpSolution sol = SolveIlp(inst, options);
  SmatchResult r;
  r.triple = {sol.score, static_cast<double>(p.size()),
              static_cast<double>(g.size())};
  r.precision = Normalize(Normalizer::kPrecision, r.triple).value;
  r.recall = Normalize(Normalizer::kRecall, r.triple).value;
  r.f = Normalize(Normalizer::kF, r.triple).value;
  r.prop_pairs = sol.item_pairs;
  r.alignment = sol.alignment;
  r.exact = sol.exact;
  return r;
}

}  // namespace structeval
