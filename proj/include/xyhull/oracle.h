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

#ifndef XYHULL_ORACLE_H_
#define XYHULL_ORACLE_H_

#include <cstddef>
#include <vector>

#include "xyhull/bounds.h"
#include "xyhull/lp.h"

namespace xyhull {

// Points (x, y, xy) of F' used as ground truth for the analytic hull.
struct SurfaceSample {
  NormalizedBounds bounds;
  int n = 0;
  std::vector<Point3> points;
  std::size_t grid_points = 0;   // Kept from the n x n grid.
  std::size_t curve_points = 0;  // On xy = lz and xy = uz.
};

// n x n grid over the box filtered to lz <= xy <= uz, log-spaced traces of the
// curves xy = lz (when it cuts the box) and xy = uz (when uz < 1), and the
// feasible box corners. Duplicates are removed.
SurfaceSample SampleSurface(const NormalizedBounds& b, int n);

// LP maximizing sum w_k z_k over convex weights reproducing (x, y).
LpProblem EnvelopeLp(const SurfaceSample& s, double x, double y);

// LP for writing p as a convex combination of samples.
LpProblem MembershipLp(const SurfaceSample& s, const Point3& p);

// Concave envelope of the sampled points at (x, y). Throws LpInfeasible when
// (x, y) is outside the sampled projection.
double OracleEnvelope(const SurfaceSample& s, double x, double y);

// Whether p is a convex combination of samples, up to 1e-9.
bool OracleMembership(const SurfaceSample& s, const Point3& p);

}  // namespace xyhull

#endif  // XYHULL_ORACLE_H_
