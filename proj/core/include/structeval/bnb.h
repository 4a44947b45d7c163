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

#ifndef STRUCTEVAL_BNB_H_
#define STRUCTEVAL_BNB_H_

// Exact depth-first branch-and-bound for small 0-1 integer programs of the
// shape produced by latent-variable and order-preserving matching:
// maximize c.x subject to integer linear "<=" constraints, c >= 0.

#include <cstddef>
#include <vector>

namespace structeval {

struct LinearConstraint {
  std::vector<int> vars;
  std::vector<int> coefs;
  int rhs = 0;  // sum_k coefs[k] * x[vars[k]] <= rhs
};

struct BinaryProgram {
  int num_vars = 0;
  std::vector<double> objective;  // one entry per variable, all >= 0
  std::vector<LinearConstraint> constraints;
  // Set-packing structure used by the bound. Variables sharing a row group
  // (or a column group) must be covered by an explicit "sum <= 1"
  // constraint. -1 means ungrouped. May be left empty.
  std::vector<int> row_group;
  std::vector<int> col_group;
  // Variables branched on before all others, in this order.
  std::vector<int> branch_first;

  int AddVar(double obj) {
    objective.push_back(obj);
    row_group.push_back(-1);
    col_group.push_back(-1);
    return num_vars++;
  }
  void AddConstraint(std::vector<int> vars, std::vector<int> coefs, int rhs) {
    constraints.push_back({std::move(vars), std::move(coefs), rhs});
  }
};

struct BnbResult {
  double objective = 0.0;
  std::vector<char> assignment;  // 0/1 per variable
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultNodeLimit = 1'000'000;

// Throws ResourceError once more than `node_limit` nodes have been opened,
// and PreconditionError when the program is infeasible.
BnbResult SolveBinaryProgram(const BinaryProgram& program,
                             std::size_t node_limit = kDefaultNodeLimit);

// The admissible bound evaluated at the root: for each row group the largest
// objective coefficient, summed (or the column version, whichever is
// smaller). No feasible solution exceeds it.
double RootBound(const BinaryProgram& program);

// True when `assignment` satisfies every constraint.
bool IsFeasible(const BinaryProgram& program,
                const std::vector<char>& assignment);

}  // namespace structeval

#endif  // STRUCTEVAL_BNB_H_
