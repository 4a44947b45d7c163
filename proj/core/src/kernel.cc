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


#include "structeval/kernel.h"

#include <algorithm>
#include <cmath>

#include "structeval/errors.h"

namespace structeval {

GramMatrix GramMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  GramMatrix g(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw PreconditionError("Gram matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      g.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    }
  }
  return g;
}

double GramMatrix::Asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
    }
  }
  return worst;
}

std::vector<double> SymmetricEigenvalues(const GramMatrix& g) {
  const int n = g.size();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  auto A = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = 0.5 * (g.at(i, j) + g.at(j, i));
  }
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += A(i, j) * A(i, j);
      }
    }
    return std::sqrt(s);
  };
  const long max_sweeps = 100L * n * n;
  for (long sweep = 0; sweep < max_sweeps && off_norm() >= 1e-12; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = A(p, q);
        if (apq == 0.0) continue;
        double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = A(k, p);
          double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = A(p, k);
          double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = A(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

bool IsPsd(const GramMatrix& g, double tol) {
  if (g.Asymmetry() > tol) {
    throw PreconditionError("Gram matrix is not symmetric within tolerance");
  }
  if (g.size() == 0) return true;
  return SymmetricEigenvalues(g).front() >= -tol;
}

}  // namespace structeval
