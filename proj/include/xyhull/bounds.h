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

#ifndef XYHULL_BOUNDS_H_
#define XYHULL_BOUNDS_H_

#include <string>

namespace xyhull {

// Bounds of F' = {(x,y,z) : z = xy, l <= (x,y,z) <= u} as supplied by a user.
struct RawBounds {
  double lx = 0.0;
  double ly = 0.0;
  double lz = 0.0;
  double ux = 1.0;
  double uy = 1.0;
  double uz = 1.0;
};

// Bounds after rescaling to ux = uy = 1. `lz` is never below lx * ly and
// `uz` never above 1.
struct NormalizedBounds {
  double lx = 0.0;
  double ly = 0.0;
  double lz = 0.0;
  double uz = 1.0;

  friend bool operator==(const NormalizedBounds&,
                         const NormalizedBounds&) = default;
};

// x_norm = x / sx, y_norm = y / sy, z_norm = z / (sx * sy).
struct Scaling {
  double sx = 1.0;
  double sy = 1.0;

  // Scaling equivalent to applying `*this` and then `next`.
  Scaling Then(const Scaling& next) const {
    return {sx * next.sx, sy * next.sy};
  }
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct Tolerance {
  double feas_tol = 1e-9;
  double boundary_tol = 1e-12;
};

// Throws InfeasibleBounds if `t` has a non-positive field.
void CheckTolerance(const Tolerance& t);

// Throws InfeasibleBounds when `b` violates 0 <= l < u or describes an empty
// surface patch.
void CheckRawBounds(const RawBounds& b);

// Throws InfeasibleBounds when `b` is not a valid normalized bound set.
void CheckNormalizedBounds(const NormalizedBounds& b);

struct Normalized {
  NormalizedBounds bounds;
  Scaling scaling;
};

// Rescales to ux = uy = 1 and raises lz to lx * ly.
Normalized Normalize(const RawBounds& b);

// Applies the implied bounds lz <= lx, ly and x <= uz / ly, y <= uz / lx
// until nothing changes. Implied reductions of the x or y upper bound are
// undone by rescaling; the extra scaling is composed into `rescale` when it is
// non-null.
NormalizedBounds Tighten(const NormalizedBounds& b, Scaling* rescale = nullptr);

// A raw bound set together with its normalized, tightened form.
struct Instance {
  RawBounds raw;
  NormalizedBounds bounds;
  Scaling scaling;  // Maps raw coordinates to `bounds` coordinates.
};

Instance Prepare(const RawBounds& raw);

Point3 ToNormalized(const Point3& p, const Scaling& s);
Point3 FromNormalized(const Point3& p, const Scaling& s);

std::string DebugString(const NormalizedBounds& b);

}  // namespace xyhull

#endif  // XYHULL_BOUNDS_H_
