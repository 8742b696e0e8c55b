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

#include "xyhull/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xyhull/errors.h"

namespace xyhull {
namespace {

constexpr double kDegenerateStep = 1e-14;

// Dense Gauss-Jordan inverse with partial pivoting; m is tiny.
std::vector<double> Invert(std::vector<double> a, int m) {
  std::vector<double> inv(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) inv[i * m + i] = 1.0;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    }
    if (std::abs(a[piv * m + col]) < 1e-300) {
      throw HullError("singular simplex basis");
    }
    if (piv != col) {
      for (int k = 0; k < m; ++k) {
        std::swap(a[col * m + k], a[piv * m + k]);
        std::swap(inv[col * m + k], inv[piv * m + k]);
      }
    }
    const double scale = 1.0 / a[col * m + col];
    for (int k = 0; k < m; ++k) {
      a[col * m + k] *= scale;
      inv[col * m + k] *= scale;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r * m + col];
      if (f == 0.0) continue;
      for (int k = 0; k < m; ++k) {
        a[r * m + k] -= f * a[col * m + k];
        inv[r * m + k] -= f * inv[col * m + k];
      }
    }
  }
  return inv;
}

class Simplex {
 public:
  Simplex(const LpProblem& p, const LpOptions& o)
      : p_(p), o_(o), m_(p.rows), n_(p.cols), sign_(m_, 1.0), basis_(m_),
        in_basis_(n_ + m_, false) {
    for (int i = 0; i < m_; ++i) {
      if (p.rhs[i] < 0.0) sign_[i] = -1.0;
      basis_[i] = n_ + i;
      in_basis_[n_ + i] = true;
    }
  }

  LpResult Run() {
    LpResult result;
    Iterate(/*phase_one=*/true, result);
    result.infeasibility = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) result.infeasibility += std::max(0.0, xb_[i]);
    }
    if (result.infeasibility > o_.feas_tol) {
      result.status = LpStatus::kInfeasible;
      Finish(result);
      return result;
    }
    DriveOutArtificials();
    if (!o_.phase_one_only && !Iterate(/*phase_one=*/false, result)) {
      result.status = LpStatus::kUnbounded;
      Finish(result);
      return result;
    }
    result.status = LpStatus::kOptimal;
    Finish(result);
    return result;
  }

 private:
  double Column(int j, int i) const {
    if (j >= n_) return j - n_ == i ? 1.0 : 0.0;
    return sign_[i] * p_.At(i, j);
  }

  double Cost(int j, bool phase_one) const {
    if (phase_one) return j >= n_ ? 1.0 : 0.0;
    return j >= n_ ? 0.0 : p_.cost[j];
  }

  void Refactor() {
    std::vector<double> bm(static_cast<size_t>(m_) * m_);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) bm[i * m_ + k] = Column(basis_[k], i);
    }
    binv_ = Invert(std::move(bm), m_);
    xb_.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) xb_[i] += binv_[i * m_ + k] * sign_[k] * p_.rhs[k];
    }
  }

  std::vector<double> Direction(int j) const {
    std::vector<double> u(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) u[i] += binv_[i * m_ + k] * Column(j, k);
    }
    return u;
  }

  // Returns false if the problem is unbounded.
  bool Iterate(bool phase_one, LpResult& result) {
    int degenerate = 0;
    std::vector<double> reduced(n_ + m_);
    for (;; ++result.iterations) {
      if (result.iterations >= o_.iteration_limit) {
        throw HullError("simplex iteration limit reached");
      }
      Refactor();
      std::vector<double> y(m_, 0.0);
      for (int k = 0; k < m_; ++k) {
        for (int i = 0; i < m_; ++i) {
          y[k] += Cost(basis_[i], phase_one) * binv_[i * m_ + k];
        }
      }
      const int limit = phase_one ? n_ + m_ : n_;
      for (int j = 0; j < limit; ++j) reduced[j] = Cost(j, phase_one);
      for (int k = 0; k < m_; ++k) {
        const double yk = y[k] * sign_[k];
        if (yk == 0.0) continue;
        const double* row = p_.a.data() + static_cast<size_t>(k) * n_;
        for (int j = 0; j < n_; ++j) reduced[j] -= yk * row[j];
        if (phase_one) reduced[n_ + k] -= y[k];
      }
      const bool bland = degenerate >= o_.degenerate_limit;
      int entering = -1;
      double best = -o_.cost_tol;
      for (int j = 0; j < limit; ++j) {
        if (in_basis_[j] || reduced[j] >= best) continue;
        entering = j;
        if (bland) break;
        best = reduced[j];
      }
      if (entering < 0) return true;

      const std::vector<double> u = Direction(entering);
      int leave = -1;
      double theta = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (u[i] <= o_.pivot_tol) continue;
        const double t = std::max(0.0, xb_[i]) / u[i];
        if (t < theta || (t == theta && basis_[i] < basis_[leave])) {
          theta = t;
          leave = i;
        }
      }
      if (leave < 0) return false;
      degenerate = theta <= kDegenerateStep ? degenerate + 1 : 0;
      in_basis_[basis_[leave]] = false;
      basis_[leave] = entering;
      in_basis_[entering] = true;
    }
  }

  // Replaces zero-level artificials by real columns where a pivot exists.
  void DriveOutArtificials() {
    Refactor();
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (in_basis_[j]) continue;
        double ur = 0.0;
        for (int k = 0; k < m_; ++k) ur += binv_[r * m_ + k] * Column(j, k);
        if (std::abs(ur) > o_.pivot_tol) {
          in_basis_[basis_[r]] = false;
          basis_[r] = j;
          in_basis_[j] = true;
          Refactor();
          break;
        }
      }
    }
  }

  void Finish(LpResult& result) {
    Refactor();
    result.weights.assign(n_, 0.0);
    result.basis.clear();
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      result.weights[basis_[i]] = std::max(0.0, xb_[i]);
      result.basis.push_back(basis_[i]);
    }
    result.objective = 0.0;
    for (int j : result.basis) result.objective += p_.cost[j] * result.weights[j];
  }

  const LpProblem& p_;
  const LpOptions& o_;
  const int m_;
  const int n_;
  std::vector<double> sign_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
  std::vector<double> binv_;
  std::vector<double> xb_;
};

}  // namespace

LpResult SolveLp(const LpProblem& p, const LpOptions& options) {
  if (p.rows <= 0 || p.cols <= 0 ||
      p.a.size() != static_cast<size_t>(p.rows) * p.cols ||
      static_cast<int>(p.rhs.size()) != p.rows ||
      static_cast<int>(p.cost.size()) != p.cols) {
    throw HullError("malformed LP dimensions");
  }
  return Simplex(p, options).Run();
}

double LpResidual(const LpProblem& p, const std::vector<double>& weights) {
  double worst = 0.0;
  for (int j = 0; j < p.cols; ++j) worst = std::max(worst, -weights[j]);
  for (int i = 0; i < p.rows; ++i) {
    double lhs = 0.0;
    for (int j = 0; j < p.cols; ++j) lhs += p.At(i, j) * weights[j];
    worst = std::max(worst, std::abs(lhs - p.rhs[i]));
  }
  return worst;
}

}  // namespace xyhull
