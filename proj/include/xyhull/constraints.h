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

#ifndef XYHULL_CONSTRAINTS_H_
#define XYHULL_CONSTRAINTS_H_

#include <array>
#include <string_view>
#include <utility>

#include "xyhull/bounds.h"

namespace xyhull {

// a0 + ax * x + ay * y + az * z >= 0.
struct LinearInequality {
  double a0 = 0.0;
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;

  // Same inequality with the roles of x and y exchanged.
  LinearInequality Mirrored() const { return {a0, ay, ax, az}; }
};

// Symmetric 2x2 matrix [[m11, m12], [m12, m22]].
struct Psd2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m22 = 0.0;

  double Det() const { return m11 * m22 - m12 * m12; }
  bool IsPsd(double tol = 1e-12) const {
    return m11 >= 0.0 && m22 >= 0.0 && Det() >= -tol;
  }
  // Eigenvalues in ascending order.
  std::array<double, 2> Eigenvalues() const;
  // The PSD square root S with S * S = *this (clamping a slightly negative
  // determinant to zero).
  Psd2 Sqrt() const;
  // x^T M x.
  double Quadratic(double x, double y) const {
    return m11 * x * x + 2.0 * m12 * x * y + m22 * y * y;
  }
};

enum class SocFamily {
  kUpperZero,
  kLower,
  kCenter,
  kSideX,
  kSideY,
  kUpperGeneral,
};

std::string_view FamilyName(SocFamily family);

// Bound values a constraint was built from. Fields a family does not use keep
// their defaults.
struct SocParams {
  double lx = 0.0;
  double ly = 0.0;
  double lz = 0.0;
  double uz = 1.0;
};

// ||A v + b||_2 <= c^T v + d for v = (x, y, z).
//
// When `mirrored` is set the constraint is the x <-> y reflection of the one
// its family constructor builds from `params`; A and c already carry the
// swapped columns.
struct SocConstraint {
  std::array<std::array<double, 3>, 2> a{};
  std::array<double, 2> b{};
  std::array<double, 3> c{};
  double d = 0.0;
  SocFamily family = SocFamily::kUpperZero;
  SocParams params;
  bool mirrored = false;

  SocConstraint Mirrored() const;
};

// The four RLT (McCormick) inequalities for ux = uy = 1, in the order
// z >= x + y - 1, z >= ly x + lx y - lx ly, z <= x + lx y - lx,
// z <= ly x + y - ly.
std::array<LinearInequality, 4> Rlt(const NormalizedBounds& b);

// z^2 <= uz x y.
SocConstraint SocUpperZero(double uz);

// The matrix M = [[1, 2lz - 1], [2lz - 1, 1]] of the lower-bound cone.
Psd2 LowerMatrix(double lz);

// sqrt((1-x, 1-y) M (1-x, 1-y)^T) <= x + y - 2z.
SocConstraint SocLower(double lz);

// (z + sqrt(lz uz))^2 <= (sqrt(lz) + sqrt(uz))^2 x y.
SocConstraint SocCenter(double lz, double uz);

// The matrices M1 (x side) and M2 (y side) of the side cones.
std::pair<Psd2, Psd2> SideMatrices(double lz, double uz);

// Side cones of the two-sided product bound: the first applies on
// y <= uz x and uses upper endpoint (1, uz); the second is its mirror.
std::pair<SocConstraint, SocConstraint> SocSides(double lz, double uz);

// uz (z - lx ly)^2 <= (uz (x - lx) + lx (z - ly x)) (uz (y - ly) + ly (z - lx y)).
// Throws DegenerateBounds if uz <= lx * ly.
SocConstraint SocUpperGeneral(double lx, double ly, double uz);

// Rebuilds a constraint of `family` from its parameters.
SocConstraint BuildSoc(SocFamily family, const SocParams& params);

// Residual; nonnegative iff the constraint holds.
double Evaluate(const LinearInequality& c, const Point3& p);
double Evaluate(const SocConstraint& c, const Point3& p);

// Largest z satisfying the constraint at (x, y), from the family's closed
// form. Throws NegativeDiscriminant below -1e-12.
double EnvelopeZ(const SocConstraint& c, double x, double y);

// A segment of F'-hull boundary points on which a lifted tangent inequality
// is tight: (x, y) = alpha * lower + (1 - alpha) * upper.
struct TangentSegment {
  Point3 lower;
  Point3 upper;
  double alpha = 0.0;
  SocFamily family = SocFamily::kUpperZero;

  Point3 At(double t) const;  // lower at t = 0, upper at t = 1.
};

struct LiftedTangent {
  LinearInequality inequality;
  TangentSegment segment;
};

// Lifted tangent inequality of the family of `c` whose tight segment passes
// through (x, y). Requires lower product <= xy <= uz for the family and a
// segment of positive length on both sides of (x, y) where a tangent point is
// needed; throws OutOfDomain otherwise.
LiftedTangent TangentThrough(const SocConstraint& c, double x, double y);

}  // namespace xyhull

#endif  // XYHULL_CONSTRAINTS_H_
