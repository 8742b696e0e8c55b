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

#include "xyhull/oracle.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "xyhull/errors.h"

namespace xyhull {
namespace {

constexpr double kLpTol = 1e-9;

// Points of xy = v inside the box, log-spaced in x.
void TraceCurve(const NormalizedBounds& b, double v, int n,
                std::vector<Point3>& out) {
  const double x0 = std::max(b.lx, v);
  const double x1 = b.ly > 0.0 ? std::min(1.0, v / b.ly) : 1.0;
  if (!(x0 <= x1)) return;
  for (int k = 0; k < n; ++k) {
    const double x = k == n - 1 ? x1 : x0 * std::pow(x1 / x0, double(k) / (n - 1));
    const double y = std::clamp(v / x, b.ly, 1.0);
    const double z = std::clamp(x * y, b.lz, b.uz);
    out.push_back({x, y, z});
  }
}

}  // namespace

SurfaceSample SampleSurface(const NormalizedBounds& b, int n) {
  CheckNormalizedBounds(b);
  if (n < 2) throw OutOfDomain("sample resolution must be at least 2");
  SurfaceSample s;
  s.bounds = b;
  s.n = n;
  std::vector<Point3> pts;
  for (int i = 0; i < n; ++i) {
    const double x = i == n - 1 ? 1.0 : b.lx + (1.0 - b.lx) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = j == n - 1 ? 1.0 : b.ly + (1.0 - b.ly) * j / (n - 1);
      const double z = x * y;
      if (z >= b.lz && z <= b.uz) pts.push_back({x, y, z});
    }
  }
  s.grid_points = pts.size();
  if (b.lz > b.lx * b.ly) TraceCurve(b, b.lz, n, pts);
  if (b.uz < 1.0) TraceCurve(b, b.uz, n, pts);
  s.curve_points = pts.size() - s.grid_points;
  for (double x : {b.lx, 1.0}) {
    for (double y : {b.ly, 1.0}) {
      if (x * y >= b.lz && x * y <= b.uz) pts.push_back({x, y, x * y});
    }
  }
  auto key = [](const Point3& p) { return std::tie(p.x, p.y, p.z); };
  std::sort(pts.begin(), pts.end(),
            [&](const Point3& a, const Point3& c) { return key(a) < key(c); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const Point3& a, const Point3& c) {
                          return key(a) == key(c);
                        }),
            pts.end());
  s.points = std::move(pts);
  return s;
}

LpProblem EnvelopeLp(const SurfaceSample& s, double x, double y) {
  LpProblem p;
  p.rows = 3;
  p.cols = static_cast<int>(s.points.size());
  p.a.resize(static_cast<size_t>(p.rows) * p.cols);
  p.cost.resize(p.cols);
  for (int j = 0; j < p.cols; ++j) {
    const Point3& q = s.points[j];
    p.a[j] = q.x;
    p.a[p.cols + j] = q.y;
    p.a[2 * p.cols + j] = 1.0;
    p.cost[j] = -q.z;
  }
  p.rhs = {x, y, 1.0};
  return p;
}

LpProblem MembershipLp(const SurfaceSample& s, const Point3& pt) {
  LpProblem p;
  p.rows = 4;
  p.cols = static_cast<int>(s.points.size());
  p.a.resize(static_cast<size_t>(p.rows) * p.cols);
  p.cost.assign(p.cols, 0.0);
  for (int j = 0; j < p.cols; ++j) {
    const Point3& q = s.points[j];
    p.a[j] = q.x;
    p.a[p.cols + j] = q.y;
    p.a[2 * p.cols + j] = q.z;
    p.a[3 * p.cols + j] = 1.0;
  }
  p.rhs = {pt.x, pt.y, pt.z, 1.0};
  return p;
}

double OracleEnvelope(const SurfaceSample& s, double x, double y) {
  LpOptions o;
  o.feas_tol = kLpTol;
  const LpResult r = SolveLp(EnvelopeLp(s, x, y), o);
  if (r.status != LpStatus::kOptimal) {
    throw LpInfeasible("query point outside the sampled projection");
  }
  return -r.objective;
}

bool OracleMembership(const SurfaceSample& s, const Point3& p) {
  LpOptions o;
  o.feas_tol = kLpTol;
  o.phase_one_only = true;
  return SolveLp(MembershipLp(s, p), o).status == LpStatus::kOptimal;
}

}  // namespace xyhull
