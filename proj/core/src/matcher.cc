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

#include "structeval/matcher.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace structeval {

MatchConstraint ParseConstraint(std::string_view name) {
  if (name == "<->" || name == "1:1" || name == "one_to_one") {
    return MatchConstraint::kOneToOne;
  }
  if (name == "->" || name == "N:1" || name == "many_to_one") {
    return MatchConstraint::kManyToOne;
  }
  if (name == "<-" || name == "1:N" || name == "one_to_many") {
    return MatchConstraint::kOneToMany;
  }
  if (name == "~" || name == "N:N" || name == "many_to_many") {
    return MatchConstraint::kManyToMany;
  }
  throw ConfigError("unknown matching constraint '" + std::string(name) + "'");
}

const char* ConstraintName(MatchConstraint c) {
  switch (c) {
    case MatchConstraint::kOneToOne: return "1:1";
    case MatchConstraint::kManyToOne: return "N:1";
    case MatchConstraint::kOneToMany: return "1:N";
    case MatchConstraint::kManyToMany: return "N:N";
  }
  return "?";
}

WeightMatrix::WeightMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) {
    throw PreconditionError("weight matrix dimensions must be nonnegative");
  }
}

WeightMatrix WeightMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  WeightMatrix w(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < w.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw PreconditionError("ragged weight matrix");
    }
    for (int c = 0; c < cols; ++c) w.set(r, c, rows[r][c]);
  }
  return w;
}

void WeightMatrix::set(int r, int c, double w) {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw PreconditionError("weights must be finite and nonnegative");
  }
  data_[Index(r, c)] = w;
}

namespace {

Matching PerRowMax(const WeightMatrix& w) {
  Matching m;
  for (int r = 0; r < w.rows(); ++r) {
    int best = -1;
    double best_w = kZeroWeight;
    for (int c = 0; c < w.cols(); ++c) {
      if (w.at(r, c) > best_w) {
        best_w = w.at(r, c);
        best = c;
      }
    }
    if (best >= 0) {
      m.pairs.emplace_back(r, best);
      m.score += best_w;
    }
  }
  return m;
}

Matching PerColMax(const WeightMatrix& w) {
  Matching m;
  for (int c = 0; c < w.cols(); ++c) {
    int best = -1;
    double best_w = kZeroWeight;
    for (int r = 0; r < w.rows(); ++r) {
      if (w.at(r, c) > best_w) {
        best_w = w.at(r, c);
        best = r;
      }
    }
    if (best >= 0) m.pairs.emplace_back(best, c);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  for (auto [r, c] : m.pairs) m.score += w.at(r, c);
  return m;
}

Matching AllPairs(const WeightMatrix& w) {
  Matching m;
  for (int r = 0; r < w.rows(); ++r) {
    for (int c = 0; c < w.cols(); ++c) {
      if (w.at(r, c) > kZeroWeight) {
        m.pairs.emplace_back(r, c);
        m.score += w.at(r, c);
      }
    }
  }
  return m;
}

}  // namespace

// Shortest augmenting path formulation (Jonker-Volgenant style potentials) on
// the zero-padded square cost matrix cost = max_w - w.
Matching Hungarian(const WeightMatrix& w) {
  Matching m;
  if (w.empty()) return m;
  const int n = std::max(w.rows(), w.cols());
  double max_w = 0.0;
  for (int r = 0; r < w.rows(); ++r) {
    for (double x : w.row(r)) max_w = std::max(max_w, x);
  }
  auto cost = [&](int r, int c) {
    double x = (r < w.rows() && c < w.cols()) ? w.at(r, c) : 0.0;
    return max_w - x;
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (int j = 1; j <= n; ++j) {
    int r = p[j] - 1;
    int c = j - 1;
    if (r < w.rows() && c < w.cols() && w.at(r, c) > kZeroWeight) {
      m.pairs.emplace_back(r, c);
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  for (auto [r, c] : m.pairs) m.score += w.at(r, c);
  return m;
}

Matching MatchScore(const WeightMatrix& w, MatchConstraint c) {
  if (w.empty()) return {};
  switch (c) {
    case MatchConstraint::kOneToOne: return Hungarian(w);
    case MatchConstraint::kManyToOne: return PerRowMax(w);
    case MatchConstraint::kOneToMany: return PerColMax(w);
    case MatchConstraint::kManyToMany: return AllPairs(w);
  }
  return {};
}

bool SatisfiesConstraint(std::span<const std::pair<int, int>> pairs,
                         MatchConstraint c) {
  std::set<int> rows, cols;
  for (auto [r, col] : pairs) {
    if (RowsExclusive(c) && !rows.insert(r).second) return false;
    if (ColsExclusive(c) && !cols.insert(col).second) return false;
  }
  return true;
}

}  // namespace structeval
