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


#ifndef STRUCTEVAL_KERNEL_H_
#define STRUCTEVAL_KERNEL_H_

// Gram matrices and kernel property checks for similarity functions.

#include <span>
#include <vector>

#include "structeval/sim.h"

namespace structeval {

class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  static GramMatrix FromRows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(int i, int j, double v) {
    data_[static_cast<std::size_t>(i) * n_ + j] = v;
  }
  // Largest |K_ij - K_ji|.
  double Asymmetry() const;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

template <typename T>
GramMatrix Gram(std::span<const T> items, const Similarity<T>& sim) {
  GramMatrix g(static_cast<int>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      g.set(static_cast<int>(i), static_cast<int>(j),
            sim.Value(items[i], items[j]));
    }
  }
  return g;
}

// Eigenvalues of the symmetrized matrix by cyclic Jacobi rotations, in
// ascending order.
std::vector<double> SymmetricEigenvalues(const GramMatrix& g);

inline constexpr double kPsdTolerance = 1e-8;

// Minimum eigenvalue >= -tol. Throws PreconditionError when the matrix is
// asymmetric beyond tol.
bool IsPsd(const GramMatrix& g, double tol = kPsdTolerance);

// sim(x, x) >= sim(x, y) - 1e-9 for every ordered pair of items.
template <typename T>
bool IsStrong(std::span<const T> items, const Similarity<T>& sim) {
  for (const T& x : items) {
    double self = sim.Value(x, x);
    for (const T& y : items) {
      if (self < sim.Value(x, y) - kScoreTolerance) return false;
    }
  }
  return true;
}

}  // namespace structeval

#endif  // STRUCTEVAL_KERNEL_H_
