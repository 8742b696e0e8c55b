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

#ifndef XYHULL_VOLUME_H_
#define XYHULL_VOLUME_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "xyhull/hull.h"

namespace xyhull {

// Which side of the split z = b: the upper-bounded piece z <= b or the
// lower-bounded piece z >= b, both over the unit box.
enum class Side { kUpper, kLower };

// Volume of the RLT relaxation over the unit box cut at z = b.
double VolRltCut(Side side, double b);

// Closed-form hull volume over the unit box with z <= b or z >= b.
double VolHull(Side side, double b);

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Integral of max(0, zmax - zmin) over the box. The inner integral in y is
// adaptive Gauss-Kronrod; the outer one uses grid_n Gauss-Legendre panels in
// x. `error` is the change from grid_n / 2 panels.
Estimate VolNumeric(const HullDescription& d, int grid_n = 1024);

struct McEstimate {
  double value = 0.0;
  double sigma = 0.0;  // One standard deviation.
  std::int64_t samples = 0;
  std::int64_t hits = 0;
  std::uint64_t seed = 0;
};

// Hit-or-miss estimate over [lx,1] x [ly,1] x [zlo,zhi]. Samples are drawn
// in fixed-size chunks, each from its own generator keyed by (seed, chunk),
// so the result does not depend on the number of threads.
McEstimate VolMc(const HullDescription& d, std::int64_t samples,
                 std::uint64_t seed);

struct VolumeReport {
  std::optional<double> closed_form;
  std::optional<Estimate> numeric;
  std::optional<McEstimate> monte_carlo;
  int grid_n = 0;
};

// Closed form when the instance is UpperOnly or LowerOnly with lx = ly = 0.
std::optional<double> ClosedFormVolume(const HullDescription& d);

struct RatioPoint {
  double b = 0.0;
  double ub_ratio = 0.0;   // Upper hull / upper RLT cut.
  double lb_ratio = 0.0;   // Lower hull / lower RLT cut.
  double sum_ratio = 0.0;  // Sum of hulls / 1/6.
};

struct BranchReport {
  double b_star = 0.0;
  double sum_ratio = 0.0;  // At b_star.
  double reduction = 0.0;  // 1 - sum_ratio.
  std::vector<RatioPoint> curve;
};

// Root in (0, 1) of ln b = 2 (b - 1), the minimizer of the summed hull
// volumes.
double BranchPoint();

std::vector<RatioPoint> RatioCurve(const std::vector<double>& bs);

// Ratio curve on b = k / (curve_points + 1), k = 1..curve_points.
BranchReport OptimalBranch(int curve_points = 99);

}  // namespace xyhull

#endif  // XYHULL_VOLUME_H_
