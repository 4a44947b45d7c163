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


#include "structeval/ordered.h"

#include <algorithm>
#include <map>
#include <string>

#include "structeval/errors.h"

namespace structeval {

OrderKind ParseOrderKind(std::string_view name) {
  if (name == "total") return OrderKind::kTotal;
  if (name == "partial") return OrderKind::kPartial;
  if (name == "preorder") return OrderKind::kPreorder;
  throw DataError("unknown order kind '" + std::string(name) + "'");
}

const char* OrderKindName(OrderKind kind) {
  switch (kind) {
    case OrderKind::kTotal:
      return "total";
    case OrderKind::kPartial:
      return "partial";
    case OrderKind::kPreorder:
      return "preorder";
  }
  return "?";
}

OrderRelation OrderRelation::Total(int n) {
  OrderRelation r;
  r.n_ = n;
  r.kind_ = OrderKind::kTotal;
  r.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) r.leq_[static_cast<std::size_t>(i) * n + j] = 1;
  }
  return r;
}

OrderRelation::OrderRelation(int n, OrderKind kind,
                             std::span<const std::pair<int, int>> pairs)
    : n_(n), kind_(kind), pairs_(pairs.begin(), pairs.end()) {
  if (kind == OrderKind::kTotal) {
    if (!pairs.empty()) {
      throw DataError("a total order takes no explicit order pairs");
    }
    *this = Total(n);
    return;
  }
  leq_.assign(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> char& {
    return leq_[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) at(i, i) = 1;
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw DataError("order pair (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") is out of range for " +
                      std::to_string(n) + " items");
    }
    at(i, j) = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!at(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (at(k, j)) at(i, j) = 1;
      }
    }
  }
  if (kind == OrderKind::kPartial) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (at(i, j) && at(j, i)) {
          throw DataError("partial order is not antisymmetric: items " +
                          std::to_string(i) + " and " + std::to_string(j) +
                          " precede each other");
        }
      }
    }
  }
}

OrderRelation OrderRelation::Permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw PreconditionError("permutation size does not match relation");
  }
  OrderRelation r;
  r.n_ = n_;
  r.kind_ = kind_;
  r.leq_.assign(leq_.size(), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      r.leq_[static_cast<std::size_t>(perm[i]) * n_ + perm[j]] = Leq(i, j);
    }
  }
  for (auto [i, j] : pairs_) r.pairs_.emplace_back(perm[i], perm[j]);
  return r;
}

Matching SeqMatchScore(const WeightMatrix& w) {
  const int n = w.rows();
  const int m = w.cols();
  // best[i][j]: optimum over the suffixes P[i:], R[j:].
  std::vector<std::vector<double>> best(n + 1, std::vector<double>(m + 1, 0));
  for (int i = n - 1; i >= 0; --i) {
    for (int j = m - 1; j >= 0; --j) {
      best[i][j] = std::max({best[i + 1][j], best[i][j + 1],
                             w.at(i, j) + best[i + 1][j + 1]});
    }
  }
  Matching out;
  out.score = best[0][0];
  int i = 0;
  int j = 0;
  while (i < n && j < m && best[i][j] > kZeroWeight) {
    bool found = false;
    for (int u = i; u < n && !found; ++u) {
      for (int v = j; v < m; ++v) {
        double wv = w.at(u, v);
        if (wv > kZeroWeight &&
            wv + best[u + 1][v + 1] >= best[i][j] - kScoreTolerance) {
          out.pairs.emplace_back(u, v);
          i = u + 1;
          j = v + 1;
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  return out;
}

bool IsMonotone(std::span<const std::pair<int, int>> pairs,
                const OrderRelation& pred, const OrderRelation& gold) {
  for (auto [u, v] : pairs) {
    for (auto [u2, v2] : pairs) {
      if (pred.Leq(u, u2) != gold.Leq(v, v2)) return false;
    }
  }
  return true;
}

Matching GraphMatchScore(const WeightMatrix& w, const OrderRelation& pred,
                         const OrderRelation& gold, MatchConstraint c,
                         std::size_t node_limit, int item_cap) {
  if (pred.size() != w.rows() || gold.size() != w.cols()) {
    throw PreconditionError("order relation size does not match weights");
  }
  if (w.rows() > item_cap || w.cols() > item_cap) {
    throw ResourceError("ordered matching is capped at " +
                        std::to_string(item_cap) + " items per side (got " +
                        std::to_string(w.rows()) + " x " +
                        std::to_string(w.cols()) + ")");
  }
  BinaryProgram program;
  std::vector<std::pair<int, int>> var_pair;
  for (int u = 0; u < w.rows(); ++u) {
    for (int v = 0; v < w.cols(); ++v) {
      if (w.at(u, v) <= kZeroWeight) continue;
      int id = program.AddVar(w.at(u, v));
      var_pair.emplace_back(u, v);
      if (RowsExclusive(c)) program.row_group[id] = u;
      if (ColsExclusive(c)) program.col_group[id] = v;
    }
  }
  const int k = program.num_vars;
  for (int a = 0; a < k; ++a) {
    auto [u, v] = var_pair[a];
    for (int b = a + 1; b < k; ++b) {
      auto [u2, v2] = var_pair[b];
      bool ok = pred.Leq(u, u2) == gold.Leq(v, v2) &&
                pred.Leq(u2, u) == gold.Leq(v2, v);
      if (!ok) program.AddConstraint({a, b}, {1, 1}, 1);
    }
  }
  auto add_groups = [&](bool by_row) {
    std::map<int, std::vector<int>> groups;
    for (int a = 0; a < k; ++a) {
      groups[by_row ? var_pair[a].first : var_pair[a].second].push_back(a);
    }
    for (auto& [key, vars] : groups) {
      if (vars.size() < 2) continue;
      std::vector<int> coefs(vars.size(), 1);
      program.AddConstraint(std::move(vars), std::move(coefs), 1);
    }
  };
  if (RowsExclusive(c)) add_groups(true);
  if (ColsExclusive(c)) add_groups(false);

  Matching out;
  if (k == 0) return out;
  BnbResult r = SolveBinaryProgram(program, node_limit);
  out.score = r.objective;
  for (int a = 0; a < k; ++a) {
    if (r.assignment[a]) out.pairs.push_back(var_pair[a]);
  }
  return out;
}

}  // namespace structeval
