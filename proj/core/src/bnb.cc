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

#include "structeval/bnb.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "structeval/errors.h"

namespace structeval {

namespace {

constexpr double kPruneSlack = 1e-9;

double GroupedSum(const std::vector<double>& objective,
                  const std::vector<signed char>& value,
                  const std::vector<int>& group, std::vector<double>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0.0);
  double loose = 0.0;
  for (std::size_t v = 0; v < objective.size(); ++v) {
    if (value[v] != -1 || objective[v] <= 0.0) continue;
    int g = group.empty() ? -1 : group[v];
    if (g < 0) {
      loose += objective[v];
    } else {
      scratch[g] = std::max(scratch[g], objective[v]);
    }
  }
  return std::accumulate(scratch.begin(), scratch.end(), loose);
}

int MaxGroup(const std::vector<int>& group) {
  int m = -1;
  for (int g : group) m = std::max(m, g);
  return m;
}

class Solver {
 public:
  Solver(const BinaryProgram& p, std::size_t node_limit)
      : p_(p),
        node_limit_(node_limit),
        value_(p.num_vars, -1),
        min_activity_(p.constraints.size(), 0),
        var_cons_(p.num_vars),
        row_scratch_(MaxGroup(p.row_group) + 1),
        col_scratch_(MaxGroup(p.col_group) + 1) {
    for (std::size_t k = 0; k < p.constraints.size(); ++k) {
      const auto& c = p.constraints[k];
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        var_cons_[c.vars[i]].push_back({static_cast<int>(k), c.coefs[i]});
        if (c.coefs[i] < 0) min_activity_[k] += c.coefs[i];
      }
    }
    // Branching order: explicit priority, then positive objective (largest
    // first), then everything else.
    std::vector<char> placed(p.num_vars, 0);
    for (int v : p.branch_first) {
      if (!placed[v]) {
        order_.push_back(v);
        placed[v] = 1;
      }
    }
    std::vector<int> rest;
    for (int v = 0; v < p.num_vars; ++v) {
      if (!placed[v]) rest.push_back(v);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      return p.objective[a] > p.objective[b];
    });
    order_.insert(order_.end(), rest.begin(), rest.end());
    priority_.assign(p.num_vars, 0);
    for (int v : p.branch_first) priority_[v] = 1;
  }

  BnbResult Run() {
    std::vector<int> all(p_.constraints.size());
    std::iota(all.begin(), all.end(), 0);
    bool ok = true;
    for (std::size_t k = 0; k < min_activity_.size(); ++k) {
      if (min_activity_[k] > p_.constraints[k].rhs) ok = false;
    }
    if (ok) ok = Propagate(all);
    if (ok) Search();
    if (best_ < 0.0) {
      throw PreconditionError("binary program is infeasible");
    }
    BnbResult r;
    r.objective = best_;
    r.assignment = std::move(best_assignment_);
    r.nodes = nodes_;
    return r;
  }

 private:
  struct Term {
    int constraint;
    int coef;
  };

  // Returns false on conflict. The assignment is recorded either way so that
  // Undo restores a consistent state.
  bool Assign(int var, int val, std::vector<int>& touched) {
    value_[var] = static_cast<signed char>(val);
    trail_.push_back(var);
    if (val == 1) current_ += p_.objective[var];
    bool ok = true;
    for (const Term& t : var_cons_[var]) {
      int delta = 0;
      if (t.coef > 0 && val == 1) delta = t.coef;
      if (t.coef < 0 && val == 0) delta = -t.coef;
      if (delta == 0) continue;
      min_activity_[t.constraint] += delta;
      if (min_activity_[t.constraint] > p_.constraints[t.constraint].rhs) {
        ok = false;
      }
      touched.push_back(t.constraint);
    }
    return ok;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int var = trail_.back();
      trail_.pop_back();
      int val = value_[var];
      if (val == 1) current_ -= p_.objective[var];
      for (const Term& t : var_cons_[var]) {
        if (t.coef > 0 && val == 1) min_activity_[t.constraint] -= t.coef;
        if (t.coef < 0 && val == 0) min_activity_[t.constraint] += t.coef;
      }
      value_[var] = -1;
    }
  }

  bool Propagate(std::vector<int> queue) {
    while (!queue.empty()) {
      int k = queue.back();
      queue.pop_back();
      const auto& c = p_.constraints[k];
      int slack = c.rhs - min_activity_[k];
      if (slack < 0) return false;
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        int v = c.vars[i];
        if (value_[v] != -1) continue;
        int coef = c.coefs[i];
        if (coef > 0 && coef > slack) {
          if (!Assign(v, 0, queue)) return false;
        } else if (coef < 0 && -coef > slack) {
          if (!Assign(v, 1, queue)) return false;
        }
        slack = c.rhs - min_activity_[k];
        if (slack < 0) return false;
      }
    }
    return true;
  }

  double Relaxation() {
    double rows = GroupedSum(p_.objective, value_, p_.row_group, row_scratch_);
    double cols = GroupedSum(p_.objective, value_, p_.col_group, col_scratch_);
    return std::min(rows, cols);
  }

  bool ZeroCompletionFeasible() const {
    for (std::size_t k = 0; k < p_.constraints.size(); ++k) {
      const auto& c = p_.constraints[k];
      int act = min_activity_[k];
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        if (value_[c.vars[i]] == -1 && c.coefs[i] < 0) act -= c.coefs[i];
      }
      if (act > c.rhs) return false;
    }
    return true;
  }

  void RecordIncumbent() {
    best_ = current_;
    best_assignment_.assign(p_.num_vars, 0);
    for (int v = 0; v < p_.num_vars; ++v) {
      best_assignment_[v] = value_[v] == 1 ? 1 : 0;
    }
  }

  void Search() {
    if (++nodes_ > node_limit_) {
      throw ResourceError("branch-and-bound node limit of " +
                          std::to_string(node_limit_) + " exceeded");
    }
    if (best_ >= 0.0 && current_ + Relaxation() <= best_ + kPruneSlack) return;

    int var = -1;
    for (int v : order_) {
      if (value_[v] == -1) {
        var = v;
        break;
      }
    }
    if (var < 0) {
      if (current_ > best_) RecordIncumbent();
      return;
    }
    const bool pays = p_.objective[var] > 0.0 || priority_[var];
    if (!pays && ZeroCompletionFeasible()) {
      if (current_ > best_) RecordIncumbent();
      return;
    }
    const int first = pays ? 1 : 0;
    for (int val : {first, 1 - first}) {
      std::size_t mark = trail_.size();
      std::vector<int> touched;
      if (Assign(var, val, touched) && Propagate(std::move(touched))) {
        Search();
      }
      Undo(mark);
    }
  }

  const BinaryProgram& p_;
  std::size_t node_limit_;
  std::vector<signed char> value_;
  std::vector<int> min_activity_;
  std::vector<std::vector<Term>> var_cons_;
  std::vector<int> order_;
  std::vector<char> priority_;
  std::vector<int> trail_;
  std::vector<double> row_scratch_;
  std::vector<double> col_scratch_;
  double current_ = 0.0;
  double best_ = -1.0;
  std::vector<char> best_assignment_;
  std::size_t nodes_ = 0;
};

void CheckProgram(const BinaryProgram& p) {
  if (static_cast<int>(p.objective.size()) != p.num_vars) {
    throw PreconditionError("objective size does not match variable count");
  }
  for (double c : p.objective) {
    if (!(c >= 0.0)) throw PreconditionError("objective must be nonnegative");
  }
  for (const auto& c : p.constraints) {
    if (c.vars.size() != c.coefs.size()) {
      throw PreconditionError("constraint term count mismatch");
    }
    for (int v : c.vars) {
      if (v < 0 || v >= p.num_vars) {
        throw PreconditionError("constraint references unknown variable");
      }
    }
  }
  auto check_groups = [&](const std::vector<int>& g) {
    if (!g.empty() && static_cast<int>(g.size()) != p.num_vars) {
      throw PreconditionError("group vector size does not match variables");
    }
  };
  check_groups(p.row_group);
  check_groups(p.col_group);
}

}  // namespace

BnbResult SolveBinaryProgram(const BinaryProgram& program,
                             std::size_t node_limit) {
  CheckProgram(program);
  Solver solver(program, node_limit);
  return solver.Run();
}

double RootBound(const BinaryProgram& program) {
  CheckProgram(program);
  std::vector<signed char> free(program.num_vars, -1);
  std::vector<double> rs(MaxGroup(program.row_group) + 1);
  std::vector<double> cs(MaxGroup(program.col_group) + 1);
  return std::min(GroupedSum(program.objective, free, program.row_group, rs),
                  GroupedSum(program.objective, free, program.col_group, cs));
}

bool IsFeasible(const BinaryProgram& program,
                const std::vector<char>& assignment) {
  if (static_cast<int>(assignment.size()) != program.num_vars) return false;
  for (const auto& c : program.constraints) {
    int act = 0;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      act += c.coefs[i] * (assignment[c.vars[i]] ? 1 : 0);
    }
    if (act > c.rhs) return false;
  }
  return true;
}

}  // namespace structeval
