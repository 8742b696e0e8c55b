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

#include "xyhull/volume.h"

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.h"
#include "xyhull/errors.h"

namespace xyhull {
namespace {

TEST(RltCutTest, Values) {
  EXPECT_NEAR(VolRltCut(Side::kUpper, 1.0), 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(VolRltCut(Side::kLower, 0.0), 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(VolRltCut(Side::kUpper, 0.5), 0.1458333, 1e-7);
  for (int k = 1; k <= 9; ++k) {
    const double b = k / 10.0;
    EXPECT_NEAR(VolRltCut(Side::kUpper, b) + VolRltCut(Side::kLower, b),
                1.0 / 6.0, 1e-16);
  }
  EXPECT_THROW(VolRltCut(Side::kUpper, 1.5), OutOfDomain);
}

TEST(HullVolumeTest, Values) {
  EXPECT_NEAR(VolHull(Side::kUpper, 0.4), 0.113798, 1e-6);
  EXPECT_NEAR(VolHull(Side::kUpper, 0.3), 0.094381, 1e-6);
  EXPECT_NEAR(VolHull(Side::kLower, 0.3), 0.021889, 1e-6);
  EXPECT_NEAR(VolHull(Side::kUpper, 0.3) + VolHull(Side::kLower, 0.3), 0.116270,
              1e-6);
  EXPECT_NEAR(VolHull(Side::kLower, 0.2), 0.0421633, 1e-7);
  EXPECT_NEAR(VolHull(Side::kLower, 1.0), 0.0, 1e-16);
  EXPECT_NEAR(VolHull(Side::kLower, 1.0 - 1e-6), 0.0, 1e-12);
}

TEST(HullVolumeTest, NeverExceedsRltCut) {
  for (int k = 1; k < 100; ++k) {
    const double b = k / 100.0;
    EXPECT_LE(VolHull(Side::kUpper, b), VolRltCut(Side::kUpper, b));
    EXPECT_LE(VolHull(Side::kLower, b), VolRltCut(Side::kLower, b));
  }
}

TEST(NumericVolumeTest, MatchesClosedForms) {
  EXPECT_NEAR(VolNumeric(Describe({0, 0, 0, 0.4}), 256).value, 0.113798, 1e-6);
  EXPECT_NEAR(VolNumeric(Describe({0.2, 0.2, 0.2, 1.0}), 256).value,
              VolHull(Side::kLower, 0.2), 1e-6);
  EXPECT_NEAR(VolNumeric(Describe({0, 0, 0, 1}), 64).value, 1.0 / 6.0, 1e-9);
}

TEST(NumericVolumeTest, ThinSlabHasSmallVolume) {
  const Estimate e = VolNumeric(Describe({0.5, 0.5, 0.5, 0.5 + 1e-6}), 32);
  EXPECT_LT(e.value, 1e-6);
  EXPECT_GE(e.value, 0.0);
}

TEST(NumericVolumeTest, ReportsRefinementError) {
  const Estimate e = VolNumeric(Describe({0, 0, 0.2, 0.7}), 64);
  EXPECT_GE(e.error, 0.0);
  EXPECT_LT(e.error, 1e-6);
  EXPECT_THROW(VolNumeric(Describe({0, 0, 0, 1}), 8), OutOfDomain);
}

TEST(MonteCarloTest, UpperOnlyWithinThreeSigma) {
  const McEstimate m = VolMc(Describe({0, 0, 0, 0.4}), 1000000, 42);
  EXPECT_NEAR(m.value, VolHull(Side::kUpper, 0.4), 3.0 * m.sigma);
  EXPECT_NEAR(m.value, 0.1138, 3.0 * m.sigma + 1e-4);
  EXPECT_EQ(m.samples, 1000000);
}

TEST(MonteCarloTest, DeterministicForSeed) {
  const HullDescription d = Describe({0, 0, 0.2, 0.7});
  const McEstimate a = VolMc(d, 200000, 5);
  const McEstimate b = VolMc(d, 200000, 5);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.value, b.value);
  EXPECT_NE(VolMc(d, 200000, 6).hits, a.hits);
  EXPECT_THROW(VolMc(d, 10, 1), OutOfDomain);
}

TEST(MonteCarloTest, AgreesWithNumericForEveryCase) {
  for (const testing::NamedCase& c : testing::ReferenceCases()) {
    const HullDescription d = Describe(Prepare(c.raw).bounds);
    const Estimate num = VolNumeric(d, 64);
    const McEstimate mc = VolMc(d, 400000, 7);
    EXPECT_NEAR(mc.value, num.value, 3.0 * mc.sigma) << c.name;
  }
}

TEST(ClosedFormTest, OnlyForZeroBoxLowerBounds) {
  EXPECT_NEAR(*ClosedFormVolume(Describe({0, 0, 0, 0.4})), 0.113798, 1e-6);
  EXPECT_NEAR(*ClosedFormVolume(Describe({0, 0, 0, 1})), 1.0 / 6.0, 1e-16);
  EXPECT_FALSE(ClosedFormVolume(Describe({0, 0, 0.2, 0.7})).has_value());
  EXPECT_FALSE(ClosedFormVolume(Describe({0.5, 0.3, 0.3, 1.0})).has_value());
}

TEST(BranchTest, OptimalPoint) {
  const BranchReport r = OptimalBranch(9);
  EXPECT_NEAR(r.b_star, 0.2032, 1e-4);
  EXPECT_NEAR(std::log(r.b_star), 2.0 * (r.b_star - 1.0), 1e-12);
  EXPECT_NEAR(r.sum_ratio, 0.676, 1e-3);
  EXPECT_NEAR(r.reduction, 1.0 - r.sum_ratio, 1e-16);
  ASSERT_EQ(r.curve.size(), 9u);
  for (const RatioPoint& p : r.curve) {
    EXPECT_GE(p.ub_ratio, 0.0);
    EXPECT_LE(p.ub_ratio, 1.0);
    EXPECT_GE(p.lb_ratio, 0.0);
    EXPECT_LE(p.lb_ratio, 1.0);
    EXPECT_GE(p.sum_ratio, r.sum_ratio - 1e-15);
  }
}

TEST(BranchTest, SumIsStationaryAtOptimum) {
  const double b = BranchPoint();
  const double h = 1e-5;
  auto sum = [](double v) {
    return VolHull(Side::kUpper, v) + VolHull(Side::kLower, v);
  };
  EXPECT_LE(std::abs((sum(b + h) - sum(b - h)) / (2 * h)), 1e-6);
}

}  // namespace
}  // namespace xyhull
