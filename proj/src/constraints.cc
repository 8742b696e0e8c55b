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

#include "xyhull/constraints.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "xyhull/errors.h"

namespace xyhull {
namespace {

constexpr double kDiscriminantClamp = -1e-12;
constexpr double kDomainTol = 1e-12;

double ClampedRoot(double disc, SocFamily family) {
  if (disc < kDiscriminantClamp) {
    throw NegativeDiscriminant(std::string(FamilyName(family)) +
                               " envelope evaluated outside its region");
  }
  return std::sqrt(std::max(disc, 0.0));
}

// Writes rows of S * (hat_x, hat_y) with hat_x = sx - x and hat_y = sy - y
// into c.a and c.b.
void SetShiftedNorm(const Psd2& m, double shift_x, double shift_y,
                    SocConstraint& c) {
  const Psd2 s = m.Sqrt();
  c.a[0] = {-s.m11, -s.m12, 0.0};
  c.a[1] = {-s.m12, -s.m22, 0.0};
  c.b[0] = s.m11 * shift_x + s.m12 * shift_y;
  c.b[1] = s.m12 * shift_x + s.m22 * shift_y;
}

void CheckUnitInterval(double lz, double uz, const char* what) {
  if (!(lz >= 0.0 && lz < uz && uz <= 1.0)) {
    throw DegenerateBounds(std::string(what) + " needs 0 <= lz < uz <= 1");
  }
}

// Inequality tangent to the curve xy = p.z at (p.x, p.y) and lifted through
// `other`, so that it is tight on the segment joining the two points.
LinearInequality LiftTangent(const Point3& p, const Point3& other) {
  const double rise = other.z - p.z;
  const double gain = p.y * (other.x - p.x) + p.x * (other.y - p.y);
  const double slope = -gain / rise;
  return {-2.0 * p.x * p.y - slope * p.z, p.y, p.x, slope};
}

// Segment through (x, y) ending at the fixed point `end` on the upper level
// uz, starting on the curve xy = lz.
TangentSegment SegmentToFixedUpper(double x, double y, double lz, double uz,
                                   double ex, double ey, SocFamily family) {
  // (x - beta ex)(y - beta ey) = lz (1 - beta)^2, smallest root in beta.
  const double qa = ex * ey - lz;
  const double qb = x * ey + y * ex - 2.0 * lz;
  const double qc = x * y - lz;
  const double disc = std::max(qb * qb - 4.0 * qa * qc, 0.0);
  const double beta = 2.0 * qc / (qb + std::sqrt(disc));
  const double alpha = 1.0 - beta;
  if (!(alpha > kDomainTol) || !std::isfinite(beta)) {
    throw OutOfDomain("point coincides with the fixed upper endpoint");
  }
  TangentSegment seg;
  seg.family = family;
  seg.alpha = alpha;
  seg.lower = {(x - beta * ex) / alpha, (y - beta * ey) / alpha, lz};
  seg.upper = {ex, ey, uz};
  return seg;
}

// Segment through (x, y) starting at the fixed corner (cx, cy, cx cy) and
// ending on the curve xy = uz.
TangentSegment SegmentFromFixedLower(double x, double y, double cx, double cy,
                                     double uz, SocFamily family) {
  const double dx = x - cx;
  const double dy = y - cy;
  const double qa = uz - cx * cy;
  const double qb = dx * cy + dy * cx;
  const double disc = std::max(qb * qb + 4.0 * qa * dx * dy, 0.0);
  const double beta = (qb + std::sqrt(disc)) / (2.0 * qa);
  if (!(beta > kDomainTol) || !std::isfinite(beta)) {
    throw OutOfDomain("point coincides with the fixed lower corner");
  }
  const double alpha = 1.0 - beta;
  TangentSegment seg;
  seg.family = family;
  seg.alpha = alpha;
  seg.lower = {cx, cy, cx * cy};
  seg.upper = {(x - alpha * cx) / beta, (y - alpha * cy) / beta, uz};
  return seg;
}

LiftedTangent CanonicalTangent(const SocConstraint& c, double x, double y) {
  const SocParams& p = c.params;
  const double xy = x * y;
  if (x < -kDomainTol || y < -kDomainTol) {
    throw OutOfDomain("tangent point must be nonnegative");
  }
  double lower_product = p.lz;
  if (c.family == SocFamily::kUpperZero) lower_product = 0.0;
  if (c.family == SocFamily::kUpperGeneral) lower_product = p.lx * p.ly;
  if (xy < lower_product - kDomainTol || xy > p.uz + kDomainTol) {
    throw OutOfDomain("tangent point needs lower product <= xy <= uz");
  }

  LiftedTangent out;
  switch (c.family) {
    case SocFamily::kUpperZero:
      out.segment = SegmentFromFixedLower(x, y, 0.0, 0.0, p.uz, c.family);
      out.inequality = LiftTangent(out.segment.upper, out.segment.lower);
      break;
    case SocFamily::kUpperGeneral:
      out.segment = SegmentFromFixedLower(x, y, p.lx, p.ly, p.uz, c.family);
      out.inequality = LiftTangent(out.segment.upper, out.segment.lower);
      break;
    case SocFamily::kLower:
      out.segment = SegmentToFixedUpper(x, y, p.lz, 1.0, 1.0, 1.0, c.family);
      out.inequality = LiftTangent(out.segment.lower, out.segment.upper);
      break;
    case SocFamily::kSideX:
      out.segment = SegmentToFixedUpper(x, y, p.lz, p.uz, 1.0, p.uz, c.family);
      out.inequality = LiftTangent(out.segment.lower, out.segment.upper);
      break;
    case SocFamily::kSideY:
      out.segment = SegmentToFixedUpper(x, y, p.lz, p.uz, p.uz, 1.0, c.family);
      out.inequality = LiftTangent(out.segment.lower, out.segment.upper);
      break;
    case SocFamily::kCenter: {
      if (!(xy > 0.0)) throw OutOfDomain("centre tangent needs xy > 0");
      const double root = std::sqrt(xy);
      const double to_lower = std::sqrt(p.lz) / root;
      const double to_upper = std::sqrt(p.uz) / root;
      TangentSegment& seg = out.segment;
      seg.family = c.family;
      seg.lower = {x * to_lower, y * to_lower, p.lz};
      seg.upper = {x * to_upper, y * to_upper, p.uz};
      seg.alpha =
          (std::sqrt(p.uz) - root) / (std::sqrt(p.uz) - std::sqrt(p.lz));
      // With lz = 0 the lower end is the origin, where the curve has no
      // tangent; use the upper end instead.
      out.inequality = p.lz > 0.0 ? LiftTangent(seg.lower, seg.upper)
                                  : LiftTangent(seg.upper, seg.lower);
      break;
    }
  }
  return out;
}

Point3 Swap(const Point3& p) { return {p.y, p.x, p.z}; }

}  // namespace

std::array<double, 2> Psd2::Eigenvalues() const {
  const double mean = 0.5 * (m11 + m22);
  const double half_gap = 0.5 * (m11 - m22);
  const double r = std::hypot(half_gap, m12);
  return {mean - r, mean + r};
}

Psd2 Psd2::Sqrt() const {
  const double root_det = std::sqrt(std::max(Det(), 0.0));
  const double t = std::sqrt(std::max(m11 + m22 + 2.0 * root_det, 0.0));
  if (t == 0.0) return {};
  return {(m11 + root_det) / t, m12 / t, (m22 + root_det) / t};
}

std::string_view FamilyName(SocFamily family) {
  switch (family) {
    case SocFamily::kUpperZero:
      return "UpperZero";
    case SocFamily::kLower:
      return "Lower";
    case SocFamily::kCenter:
      return "Center";
    case SocFamily::kSideX:
      return "SideX";
    case SocFamily::kSideY:
      return "SideY";
    case SocFamily::kUpperGeneral:
      return "UpperGeneral";
  }
  return "Unknown";
}

SocConstraint SocConstraint::Mirrored() const {
  SocConstraint m = *this;
  for (auto& row : m.a) std::swap(row[0], row[1]);
  std::swap(m.c[0], m.c[1]);
  m.mirrored = !mirrored;
  return m;
}

std::array<LinearInequality, 4> Rlt(const NormalizedBounds& b) {
  const double lx = b.lx;
  const double ly = b.ly;
  return {{
      {1.0, -1.0, -1.0, 1.0},
      {lx * ly, -ly, -lx, 1.0},
      {-lx, 1.0, lx, -1.0},
      {-ly, ly, 1.0, -1.0},
  }};
}

SocConstraint SocUpperZero(double uz) {
  if (!(uz > 0.0 && uz <= 1.0)) {
    throw DegenerateBounds("UpperZero cone needs 0 < uz <= 1");
  }
  SocConstraint c;
  c.family = SocFamily::kUpperZero;
  c.params.uz = uz;
  // z^2 <= (uz x) y  <=>  ||(2z, uz x - y)|| <= uz x + y.
  c.a[0] = {0.0, 0.0, 2.0};
  c.a[1] = {uz, -1.0, 0.0};
  c.c = {uz, 1.0, 0.0};
  return c;
}

Psd2 LowerMatrix(double lz) {
  const double off = 2.0 * lz - 1.0;
  return {1.0, off, 1.0};
}

SocConstraint SocLower(double lz) {
  if (!(lz >= 0.0 && lz < 1.0)) {
    throw DegenerateBounds("Lower cone needs 0 <= lz < 1");
  }
  SocConstraint c;
  c.family = SocFamily::kLower;
  c.params.lz = lz;
  c.params.uz = 1.0;
  SetShiftedNorm(LowerMatrix(lz), 1.0, 1.0, c);
  c.c = {1.0, 1.0, -2.0};
  return c;
}

SocConstraint SocCenter(double lz, double uz) {
  CheckUnitInterval(lz, uz, "Center cone");
  SocConstraint c;
  c.family = SocFamily::kCenter;
  c.params.lz = lz;
  c.params.uz = uz;
  const double root_sum = std::sqrt(lz) + std::sqrt(uz);
  const double k = lz == 0.0 ? uz : root_sum * root_sum;
  const double shift = std::sqrt(lz * uz);
  // (z + shift)^2 <= (k x) y.
  c.a[0] = {0.0, 0.0, 2.0};
  c.b[0] = 2.0 * shift;
  c.a[1] = {k, -1.0, 0.0};
  c.c = {k, 1.0, 0.0};
  return c;
}

std::pair<Psd2, Psd2> SideMatrices(double lz, double uz) {
  const double off = 2.0 * lz - uz;
  return {Psd2{uz * uz, off, 1.0}, Psd2{1.0, off, uz * uz}};
}

std::pair<SocConstraint, SocConstraint> SocSides(double lz, double uz) {
  CheckUnitInterval(lz, uz, "Side cones");
  const auto [m1, m2] = SideMatrices(lz, uz);
  SocConstraint side_x;
  side_x.family = SocFamily::kSideX;
  side_x.params.lz = lz;
  side_x.params.uz = uz;
  SetShiftedNorm(m1, 1.0, uz, side_x);
  side_x.c = {uz, 1.0, -2.0};

  SocConstraint side_y;
  side_y.family = SocFamily::kSideY;
  side_y.params = side_x.params;
  SetShiftedNorm(m2, uz, 1.0, side_y);
  side_y.c = {1.0, uz, -2.0};
  return {side_x, side_y};
}

SocConstraint SocUpperGeneral(double lx, double ly, double uz) {
  if (lx < 0.0 || ly < 0.0) {
    throw DegenerateBounds("UpperGeneral cone needs lx, ly >= 0");
  }
  const double gap = uz - lx * ly;
  if (!(gap > 0.0)) {
    throw DegenerateBounds("UpperGeneral cone needs uz > lx * ly");
  }
  SocConstraint c;
  c.family = SocFamily::kUpperGeneral;
  c.params = {lx, ly, lx * ly, uz};
  // w = sqrt(uz) (z - lx ly), P = gap x + lx z - uz lx,
  // Q = gap y + ly z - uz ly; w^2 <= P Q  <=>  ||(2w, P - Q)|| <= P + Q.
  const double root_uz = std::sqrt(uz);
  c.a[0] = {0.0, 0.0, 2.0 * root_uz};
  c.b[0] = -2.0 * root_uz * lx * ly;
  c.a[1] = {gap, -gap, lx - ly};
  c.b[1] = uz * (ly - lx);
  c.c = {gap, gap, lx + ly};
  c.d = -uz * (lx + ly);
  return c;
}

SocConstraint BuildSoc(SocFamily family, const SocParams& params) {
  switch (family) {
    case SocFamily::kUpperZero:
      return SocUpperZero(params.uz);
    case SocFamily::kLower:
      return SocLower(params.lz);
    case SocFamily::kCenter:
      return SocCenter(params.lz, params.uz);
    case SocFamily::kSideX:
      return SocSides(params.lz, params.uz).first;
    case SocFamily::kSideY:
      return SocSides(params.lz, params.uz).second;
    case SocFamily::kUpperGeneral:
      return SocUpperGeneral(params.lx, params.ly, params.uz);
  }
  throw HullError("unknown SOC family");
}

double Evaluate(const LinearInequality& c, const Point3& p) {
  return c.a0 + c.ax * p.x + c.ay * p.y + c.az * p.z;
}

double Evaluate(const SocConstraint& c, const Point3& p) {
  const std::array<double, 3> v = {p.x, p.y, p.z};
  double r0 = c.b[0];
  double r1 = c.b[1];
  double rhs = c.d;
  for (int j = 0; j < 3; ++j) {
    r0 += c.a[0][j] * v[j];
    r1 += c.a[1][j] * v[j];
    rhs += c.c[j] * v[j];
  }
  return rhs - std::hypot(r0, r1);
}

double EnvelopeZ(const SocConstraint& c, double x, double y) {
  if (c.mirrored) std::swap(x, y);
  const SocParams& p = c.params;
  switch (c.family) {
    case SocFamily::kUpperZero:
      return ClampedRoot(p.uz * x * y, c.family);
    case SocFamily::kLower: {
      const double disc =
          (x - y) * (x - y) + 4.0 * p.lz * (1.0 - x) * (1.0 - y);
      return 0.5 * (x + y - ClampedRoot(disc, c.family));
    }
    case SocFamily::kCenter:
      return (std::sqrt(p.lz) + std::sqrt(p.uz)) *
                 ClampedRoot(x * y, c.family) -
             std::sqrt(p.lz * p.uz);
    case SocFamily::kSideX: {
      const double u = p.uz * x - y;
      const double disc = u * u + 4.0 * p.lz * (1.0 - x) * (p.uz - y);
      return 0.5 * (p.uz * x + y - ClampedRoot(disc, c.family));
    }
    case SocFamily::kSideY: {
      const double u = x - p.uz * y;
      const double disc = u * u + 4.0 * p.lz * (p.uz - x) * (1.0 - y);
      return 0.5 * (x + p.uz * y - ClampedRoot(disc, c.family));
    }
    case SocFamily::kUpperGeneral: {
      const double u = p.ly * x - p.lx * y;
      const double disc = u * u + 4.0 * p.uz * (x - p.lx) * (y - p.ly);
      return 0.5 * (p.ly * x + p.lx * y + ClampedRoot(disc, c.family));
    }
  }
  throw HullError("unknown SOC family");
}

Point3 TangentSegment::At(double t) const {
  return {lower.x + t * (upper.x - lower.x), lower.y + t * (upper.y - lower.y),
          lower.z + t * (upper.z - lower.z)};
}

LiftedTangent TangentThrough(const SocConstraint& c, double x, double y) {
  if (!c.mirrored) return CanonicalTangent(c, x, y);
  LiftedTangent t = CanonicalTangent(c.Mirrored(), y, x);
  t.inequality = t.inequality.Mirrored();
  t.segment.lower = Swap(t.segment.lower);
  t.segment.upper = Swap(t.segment.upper);
  return t;
}

}  // namespace xyhull
