// Copyright 2026 The xyhull Authors
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

#ifndef XYHULL_LP_H_
#define XYHULL_LP_H_

#include <vector>

namespace xyhull {

// min c^T w  s.t.  A w = rhs, w >= 0, with a handful of dense rows.
struct LpProblem {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;     // Row-major, rows * cols.
  std::vector<double> rhs;   // rows.
  std::vector<double> cost;  // cols.

  double At(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  // Phase-one optimum: the least total violation of A w = rhs over w >= 0.
  double infeasibility = 0.0;
  std::vector<double> weights;  // cols entries; all zero unless basic.
  std::vector<int> basis;       // Basic columns (artificials excluded).
  int iterations = 0;
};

struct LpOptions {
  double feas_tol = 1e-9;      // Phase-one optimum above this is infeasible.
  double pivot_tol = 1e-11;    // Smallest usable pivot element.
  double cost_tol = 1e-12;     // Reduced costs above -cost_tol are optimal.
  int degenerate_limit = 50;   // Degenerate steps before switching to Bland.
  int iteration_limit = 100000;
  bool phase_one_only = false;
};

// Revised simplex with an explicit dense basis inverse, recomputed each
// iteration. Entering columns are priced by most negative reduced cost; after
// `degenerate_limit` consecutive degenerate steps pricing switches to Bland's
// rule until the objective moves again.
LpResult SolveLp(const LpProblem& p, const LpOptions& options = {});

// Largest violation of A w = rhs and of w >= 0 at `weights`.
double LpResidual(const LpProblem& p, const std::vector<double>& weights);

}  // namespace xyhull

#endif  // XYHULL_LP_H_
