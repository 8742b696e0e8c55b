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

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.h"
#include "xyhull/errors.h"

namespace xyhull {
namespace {

using testing::Rng;

double UpperGeneralSides(double lx, double ly, double uz, const Point3& p) {
  const double lhs = uz * (p.z - lx * ly) * (p.z - lx * ly);
  const double rhs = (uz * (p.x - lx) + lx * (p.z - ly * p.x)) *
                     (uz * (p.y - ly) + ly * (p.z - lx * p.y));
  return rhs - lhs;
}

TEST(RltTest, UnitBoxRows) {
  const auto rlt = Rlt({0.0, 0.0, 0.0, 1.0});
  // z >= x + y - 1, z >= 0, z <= x, z <= y.
  const Point3 p{0.5, 0.5, 0.3};
  EXPECT_NEAR(Evaluate(rlt[0], p), 0.3, 1e-15);
  EXPECT_NEAR(Evaluate(rlt[1], p), 0.3, 1e-15);
  EXPECT_NEAR(Evaluate(rlt[2], p), 0.2, 1e-15);
  EXPECT_NEAR(Evaluate(rlt[3], p), 0.2, 1e-15);
  EXPECT_EQ(Evaluate(rlt[0], {1.0, 1.0, 1.0}), 0.0);
  EXPECT_EQ(Evaluate(rlt[1], {1.0, 1.0, 1.0}), 1.0);
  EXPECT_EQ(Evaluate(rlt[2], {1.0, 1.0, 1.0}), 0.0);
  EXPECT_EQ(Evaluate(rlt[3], {1.0, 1.0, 1.0}), 0.0);
}

TEST(RltTest, GeneralLowerBounds) {
  const auto rlt = Rlt({0.5, 0.3, 0.3, 1.0});
  // z >= 0.3 x + 0.5 y - 0.15.
  EXPECT_DOUBLE_EQ(rlt[1].a0, 0.15);
  EXPECT_DOUBLE_EQ(rlt[1].ax, -0.3);
  EXPECT_DOUBLE_EQ(rlt[1].ay, -0.5);
  EXPECT_DOUBLE_EQ(rlt[1].az, 1.0);
}

TEST(RltTest, TightAtBoxCornersOfTheSurface) {
  const NormalizedBounds b{0.2, 0.4, 0.08, 1.0};
  const auto rlt = Rlt(b);
  for (double x : {b.lx, 1.0}) {
    for (double y : {b.ly, 1.0}) {
      const Point3 p{x, y, x * y};
      int tight = 0;
      for (const auto& c : rlt) {
        EXPECT_GE(Evaluate(c, p), -1e-15);
        tight += std::abs(Evaluate(c, p)) < 1e-15;
      }
      EXPECT_GE(tight, 2);
    }
  }
}

TEST(UpperZeroTest, Examples) {
  const SocConstraint c = SocUpperZero(0.4);
  EXPECT_GT(Evaluate(c, {0.5, 0.5, 0.3}), 0.0);
  EXPECT_LT(Evaluate(c, {0.5, 0.5, 0.35}), 0.0);
  EXPECT_NEAR(Evaluate(c, {0.0, 0.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(EnvelopeZ(c, 0.5, 0.5), 0.316228, 1e-6);
  EXPECT_EQ(c.family, SocFamily::kUpperZero);
}

TEST(UpperZeroTest, SignMatchesRotatedCone) {
  Rng rng(5);
  const SocConstraint c = SocUpperZero(0.4);
  for (int k = 0; k < 10000; ++k) {
    const Point3 p{rng.Uniform(), rng.Uniform(), rng.Uniform()};
    const double g = 0.4 * p.x * p.y - p.z * p.z;
    if (std::abs(g) < 1e-9) continue;
    EXPECT_EQ(Evaluate(c, p) >= 0.0, g >= 0.0);
  }
}

TEST(LowerTest, Examples) {
  const SocConstraint c = SocLower(0.2);
  EXPECT_NEAR(EnvelopeZ(c, 0.6, 0.6), 0.4211146, 1e-7);
  EXPECT_NEAR(EnvelopeZ(c, 1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(Evaluate(c, {1.0, 1.0, 1.0}), 0.0, 1e-15);
  const auto eig = LowerMatrix(0.2).Eigenvalues();
  EXPECT_NEAR(eig[0], 0.4, 1e-15);
  EXPECT_NEAR(eig[1], 1.6, 1e-15);
  EXPECT_TRUE(LowerMatrix(0.2).IsPsd());
}

TEST(CenterTest, Examples) {
  const SocConstraint c = SocCenter(0.2, 0.7);
  const double x = std::sqrt(0.45);
  const double lhs = std::pow(0.45 + std::sqrt(0.14), 2);
  const double rhs = std::pow(std::sqrt(0.2) + std::sqrt(0.7), 2) * 0.45;
  EXPECT_NEAR(lhs, 0.679249, 1e-6);
  EXPECT_NEAR(rhs, 0.74175, 1e-5);
  EXPECT_GT(Evaluate(c, {x, x, 0.45}), 0.0);
  EXPECT_NEAR(EnvelopeZ(c, 1.0, 1.0), 0.9097079, 1e-7);
}

TEST(CenterTest, TightOnTheDegenerateSlab) {
  // With lz = uz = b the cone is tight wherever xy = b.
  for (double b : {0.2, 0.5}) {
    const SocConstraint c = SocCenter(b * (1 - 1e-12), b);
    const double x = std::sqrt(b);
    EXPECT_NEAR(Evaluate(c, {x, x, b}), 0.0, 1e-9);
  }
}

TEST(CenterTest, ZeroLowerBoundIsUpperZero) {
  const SocConstraint c = SocCenter(0.0, 0.4);
  const SocConstraint u = SocUpperZero(0.4);
  for (double x : {0.1, 0.5, 0.9}) {
    for (double y : {0.2, 0.4}) {
      EXPECT_NEAR(EnvelopeZ(c, x, y), EnvelopeZ(u, x, y), 1e-15);
    }
  }
}

TEST(SidesTest, MatricesAtExample) {
  const auto [m1, m2] = SideMatrices(0.2, 0.7);
  EXPECT_NEAR(m1.m11, 0.49, 1e-15);
  EXPECT_NEAR(m1.m12, -0.3, 1e-15);
  EXPECT_NEAR(m1.m22, 1.0, 1e-15);
  EXPECT_NEAR(m1.Det(), 0.4, 1e-15);
  EXPECT_NEAR(m2.m11, 1.0, 1e-15);
  EXPECT_NEAR(m2.m22, 0.49, 1e-15);
}

TEST(SidesTest, UnitUpperBoundGivesLowerMatrix) {
  const auto [m1, m2] = SideMatrices(0.3, 1.0);
  const Psd2 m = LowerMatrix(0.3);
  EXPECT_EQ(m1.m11, m.m11);
  EXPECT_EQ(m1.m12, m.m12);
  EXPECT_EQ(m1.m22, m.m22);
  EXPECT_EQ(m2.m12, m.m12);
}

TEST(SidesTest, ZeroLowerBoundIsRlt) {
  const auto [sx, sy] = SocSides(0.0, 0.6);
  for (double x : {0.5, 0.8, 1.0}) {
    const double y = 0.5 * x;  // y <= uz x
    EXPECT_NEAR(EnvelopeZ(sx, x, y), y, 1e-15);
    EXPECT_NEAR(EnvelopeZ(sy, y, x), y, 1e-15);
  }
}

TEST(PsdTest, FamilyMatricesArePsd) {
  Rng rng(8);
  for (int k = 0; k < 1000; ++k) {
    const double uz = rng.Uniform(1e-6, 1.0);
    const double lz = rng.Uniform(0.0, uz);
    EXPECT_TRUE(LowerMatrix(lz).IsPsd());
    const auto [m1, m2] = SideMatrices(lz, uz);
    EXPECT_TRUE(m1.IsPsd());
    EXPECT_TRUE(m2.IsPsd());
  }
}

TEST(PsdTest, SquareRootSquaresBack) {
  Rng rng(9);
  for (int k = 0; k < 1000; ++k) {
    const double uz = rng.Uniform(0.01, 1.0);
    const double lz = rng.Uniform(0.0, uz);
    for (const Psd2& m : {LowerMatrix(lz), SideMatrices(lz, uz).first}) {
      const Psd2 s = m.Sqrt();
      EXPECT_NEAR(s.m11 * s.m11 + s.m12 * s.m12, m.m11, 1e-12);
      EXPECT_NEAR(s.m11 * s.m12 + s.m12 * s.m22, m.m12, 1e-12);
      EXPECT_NEAR(s.m12 * s.m12 + s.m22 * s.m22, m.m22, 1e-12);
    }
  }
}

TEST(UpperGeneralTest, Examples) {
  const SocConstraint c = SocUpperGeneral(0.4, 0.5, 0.7);
  EXPECT_NEAR(Evaluate(c, {0.4, 0.5, 0.2}), 0.0, 1e-12);
  // (z - ly x)(z - lx y) = 0.16 * 0.28 against uz (x - lx)(y - ly) = 0.056;
  // the cone form scales the slack by uz - lx ly.
  EXPECT_NEAR((0.56 - 0.5 * 0.8) * (0.56 - 0.4 * 0.7), 0.0448, 1e-15);
  EXPECT_NEAR(0.7 * 0.4 * 0.2, 0.056, 1e-15);
  EXPECT_NEAR(UpperGeneralSides(0.4, 0.5, 0.7, {0.8, 0.7, 0.56}),
              (0.7 - 0.2) * (0.056 - 0.0448), 1e-12);
  EXPECT_GT(Evaluate(c, {0.8, 0.7, 0.56}), 0.0);
  EXPECT_THROW(SocUpperGeneral(0.8, 0.9, 0.7), DegenerateBounds);
}

TEST(UpperGeneralTest, ZeroLowerBoundsGiveUpperZero) {
  const SocConstraint c = SocUpperGeneral(0.0, 0.0, 0.4);
  const SocConstraint u = SocUpperZero(0.4);
  for (double x : {0.1, 0.5, 0.9}) {
    for (double y : {0.2, 0.4}) {
      EXPECT_NEAR(EnvelopeZ(c, x, y), EnvelopeZ(u, x, y), 1e-15);
    }
  }
}

TEST(UpperGeneralTest, ConeMatchesProductForm) {
  Rng rng(10);
  const double lx = 0.3;
  const double ly = 0.4;
  const double uz = 0.6;
  const SocConstraint c = SocUpperGeneral(lx, ly, uz);
  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const Point3 p{rng.Uniform(lx, 1.0), rng.Uniform(ly, 1.0),
                   rng.Uniform(lx * ly, uz)};
    // The product form also admits the branch where both factors are
    // negative; the cone keeps the branch containing the surface.
    const double fx = uz * (p.x - lx) + lx * (p.z - ly * p.x);
    if (fx < 0.0) continue;
    const double g = UpperGeneralSides(lx, ly, uz, p);
    const double r = Evaluate(c, p);
    if (std::abs(g) < 1e-9) continue;
    ++checked;
    EXPECT_EQ(g >= 0.0, r >= 0.0) << p.x << " " << p.y << " " << p.z;
  }
  EXPECT_GT(checked, 5000);
}

TEST(EvaluateTest, LinearResidual) {
  const auto rlt = Rlt({0.0, 0.0, 0.0, 1.0});
  EXPECT_NEAR(Evaluate(rlt[2], {0.5, 0.5, 0.3}), 0.2, 1e-15);
  EXPECT_NEAR(Evaluate(SocLower(0.2), {1.0, 1.0, 1.0}), 0.0, 1e-15);
}

TEST(EnvelopeTest, EnvelopeIsTheLargestFeasibleZ) {
  Rng rng(13);
  const auto [sx, sy] = SocSides(0.2, 0.7);
  const std::vector<SocConstraint> cones = {
      SocUpperZero(0.4), SocLower(0.2), SocCenter(0.2, 0.7), sx, sy,
      SocUpperGeneral(0.2, 0.5, 0.7)};
  for (const SocConstraint& c : cones) {
    for (int k = 0; k < 1000; ++k) {
      const double x = rng.Uniform(c.params.lx, 1.0);
      const double y = rng.Uniform(c.params.ly, 1.0);
      if (c.family == SocFamily::kSideX && y > 0.7 * x) continue;
      if (c.family == SocFamily::kSideY && x > 0.7 * y) continue;
      const double z = EnvelopeZ(c, x, y);
      EXPECT_NEAR(Evaluate(c, {x, y, z}), 0.0, 1e-9);
      EXPECT_LT(Evaluate(c, {x, y, z + 1e-6}), 0.0);
    }
  }
}

TEST(EnvelopeTest, NegativeDiscriminantIsReported) {
  // Left of lx the general upper discriminant is 0.16 - 0.56 < 0.
  const SocConstraint c = SocUpperGeneral(0.4, 0.5, 0.7);
  EXPECT_THROW(EnvelopeZ(c, 0.0, 1.0), NegativeDiscriminant);
  EXPECT_THROW(EnvelopeZ(SocUpperZero(0.4), -0.5, 0.5), NegativeDiscriminant);
  // Within the box the side discriminant is never negative.
  const auto [sx, sy] = SocSides(0.5, 0.6);
  EXPECT_NO_THROW(EnvelopeZ(sx, 0.0, 1.0));
}

TEST(ValidityTest, FamiliesHoldOnTheSurface) {
  Rng rng(14);
  struct Case {
    SocConstraint c;
    NormalizedBounds b;
  };
  const auto [sx, sy] = SocSides(0.2, 0.7);
  const std::vector<Case> cases = {
      {SocUpperZero(0.4), {0, 0, 0, 0.4}},
      {SocLower(0.2), {0, 0, 0.2, 1.0}},
      {SocCenter(0.2, 0.7), {0, 0, 0.2, 0.7}},
      {sx, {0, 0, 0.2, 0.7}},
      {sy, {0, 0, 0.2, 0.7}},
      {SocUpperGeneral(0.2, 0.5, 0.7), {0.2, 0.5, 0.1, 0.7}},
  };
  for (const Case& c : cases) {
    int checked = 0;
    while (checked < 10000) {
      const Point3 p = testing::SurfacePoint(c.b, rng);
      if (c.c.family == SocFamily::kSideX && p.y > 0.7 * p.x) continue;
      if (c.c.family == SocFamily::kSideY && p.x > 0.7 * p.y) continue;
      ++checked;
      EXPECT_GE(Evaluate(c.c, p), -1e-9);
    }
  }
}

TEST(TangentTest, UpperZeroExample) {
  const LiftedTangent t = TangentThrough(SocUpperZero(0.4), 0.5, 0.5);
  const double r = std::sqrt(0.4);
  EXPECT_NEAR(t.segment.lower.x, 0.0, 1e-15);
  EXPECT_NEAR(t.segment.upper.x, r, 1e-12);
  EXPECT_NEAR(t.segment.upper.y, r, 1e-12);
  EXPECT_NEAR(t.segment.upper.z, 0.4, 1e-12);
  // Scale to the form ax x + ay y - 2 z >= 0.
  const double s = -2.0 / t.inequality.az;
  EXPECT_NEAR(t.inequality.ax * s, 0.632456, 1e-6);
  EXPECT_NEAR(t.inequality.ay * s, 0.632456, 1e-6);
  EXPECT_NEAR(t.inequality.a0 * s, 0.0, 1e-12);
  EXPECT_NEAR(Evaluate(t.inequality, t.segment.lower), 0.0, 1e-12);
  EXPECT_NEAR(Evaluate(t.inequality, t.segment.upper), 0.0, 1e-12);
}

TEST(TangentTest, CenterSegmentIsRadial) {
  const LiftedTangent t = TangentThrough(SocCenter(0.2, 0.7), 0.6, 0.6);
  EXPECT_NEAR(t.segment.upper.x / t.segment.lower.x, std::sqrt(3.5), 1e-12);
  EXPECT_NEAR(t.segment.lower.z, 0.2, 1e-12);
  EXPECT_NEAR(t.segment.upper.z, 0.7, 1e-12);
}

TEST(TangentTest, LowerSegmentEndsAtTopCorner) {
  const LiftedTangent t = TangentThrough(SocLower(0.2), 0.9, 0.9);
  EXPECT_NEAR(t.segment.upper.x, 1.0, 1e-15);
  EXPECT_NEAR(t.segment.upper.y, 1.0, 1e-15);
  EXPECT_NEAR(t.segment.upper.z, 1.0, 1e-15);
}

TEST(TangentTest, PointIsTheAlphaCombination) {
  Rng rng(15);
  const SocConstraint c = SocCenter(0.2, 0.7);
  for (int k = 0; k < 1000; ++k) {
    const double x = rng.Uniform(0.3, 1.0);
    const double y = rng.Uniform(0.3, 1.0);
    if (x * y <= 0.2 || x * y >= 0.7) continue;
    const LiftedTangent t = TangentThrough(c, x, y);
    const TangentSegment& s = t.segment;
    EXPECT_GE(s.alpha, 0.0);
    EXPECT_LE(s.alpha, 1.0);
    EXPECT_NEAR(s.alpha * s.lower.x + (1 - s.alpha) * s.upper.x, x, 1e-12);
    EXPECT_NEAR(s.alpha * s.lower.y + (1 - s.alpha) * s.upper.y, y, 1e-12);
  }
}

TEST(TangentTest, InequalityValidOnTheSurface) {
  Rng rng(16);
  const NormalizedBounds b{0.0, 0.0, 0.2, 1.0};
  const LiftedTangent t = TangentThrough(SocLower(0.2), 0.5, 0.7);
  for (int k = 0; k < 10000; ++k) {
    EXPECT_GE(Evaluate(t.inequality, testing::SurfacePoint(b, rng)), -1e-9);
  }
  EXPECT_LT(t.inequality.az, 0.0);
}

TEST(TangentTest, OutsideDomainThrows) {
  EXPECT_THROW(TangentThrough(SocUpperZero(0.4), 0.9, 0.9), OutOfDomain);
  EXPECT_THROW(TangentThrough(SocLower(0.5), 0.3, 0.3), OutOfDomain);
}

TEST(MirrorTest, MirroredConeSwapsCoordinates) {
  Rng rng(17);
  const SocConstraint c = SocUpperGeneral(0.2, 0.5, 0.7);
  const SocConstraint m = c.Mirrored();
  EXPECT_TRUE(m.mirrored);
  for (int k = 0; k < 1000; ++k) {
    const Point3 p{rng.Uniform(), rng.Uniform(), rng.Uniform()};
    EXPECT_NEAR(Evaluate(m, {p.y, p.x, p.z}), Evaluate(c, p), 1e-12);
  }
  const double x = 0.8;
  const double y = 0.6;
  EXPECT_NEAR(EnvelopeZ(m, y, x), EnvelopeZ(c, x, y), 1e-12);
  const LiftedTangent a = TangentThrough(c, x, y);
  const LiftedTangent b = TangentThrough(m, y, x);
  EXPECT_NEAR(a.inequality.ax, b.inequality.ay, 1e-12);
  EXPECT_NEAR(b.segment.upper.x, a.segment.upper.y, 1e-12);
}

TEST(BuildSocTest, RebuildsFromParameters) {
  const SocConstraint c = SocUpperGeneral(0.2, 0.5, 0.7);
  const SocConstraint r = BuildSoc(c.family, c.params);
  EXPECT_EQ(r.a, c.a);
  EXPECT_EQ(r.b, c.b);
  EXPECT_EQ(r.c, c.c);
  EXPECT_EQ(r.d, c.d);
}

}  // namespace
}  // namespace xyhull
