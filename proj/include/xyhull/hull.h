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

#ifndef XYHULL_HULL_H_
#define XYHULL_HULL_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xyhull/bounds.h"
#include "xyhull/constraints.h"

namespace xyhull {

// Case taxonomy of conv(F'). RegionE and RegionF name the mirror images of
// RegionC and RegionD; Classify() reports them as C/D with `swapped` set.
enum class CaseTag {
  kNoZBound,
  kUpperOnly,
  kLowerOnly,
  kBothZeroLB,
  kRegionA,
  kRegionB,
  kRegionC,
  kRegionD,
  kRegionE,
  kRegionF,
};

std::string_view CaseName(CaseTag tag);

struct Classification {
  CaseTag tag = CaseTag::kNoZBound;
  bool swapped = false;  // Constraints were built for (y, x).
};

// Case of tightened bounds. For two-sided product bounds with positive lower
// bounds the instance is viewed with lx <= ly.
Classification Classify(const NormalizedBounds& b, const Tolerance& tol = {});

// Region A-F of (lx, ly) for two-sided product bounds, in the original
// orientation (E and F may be returned). Other cases return the Classify tag.
CaseTag RegionOf(const NormalizedBounds& b, const Tolerance& tol = {});

// a0 + ax * x + ay * y >= 0.
struct HalfPlane {
  double a0 = 0.0;
  double ax = 0.0;
  double ay = 0.0;

  double Value(double x, double y) const { return a0 + ax * x + ay * y; }
};

// Conjunction of at most two half-planes; the empty conjunction is the whole
// box.
struct RegionPredicate {
  std::vector<HalfPlane> planes;

  bool Holds(double x, double y, double boundary_tol) const;
  RegionPredicate Mirrored() const;
};

// y = a + b x.
struct BoundaryLine {
  double a = 0.0;
  double b = 0.0;
};

// Line through (lz / ly, ly) and (uz, 1) separating the two region-D pieces.
BoundaryLine DLine(double ly, double lz, double uz);

struct HullPiece {
  RegionPredicate predicate;
  SocConstraint soc;
  bool globally_valid = false;
};

struct HullDescription {
  NormalizedBounds bounds;
  CaseTag tag = CaseTag::kNoZBound;
  bool swapped = false;
  std::array<LinearInequality, 4> rlt{};
  double zlo = 0.0;
  double zhi = 1.0;
  std::vector<HullPiece> pieces;
  Tolerance tol;
};

HullDescription Describe(const NormalizedBounds& b, const Tolerance& tol = {});

bool IsMember(const HullDescription& d, const Point3& p);

// Smallest residual over every inequality `IsMember` checks (negative when p
// is outside), together with a label of the binding item.
struct WorstResidual {
  double residual = 0.0;
  std::string label;
};
WorstResidual Worst(const HullDescription& d, const Point3& p);

enum class CutSource { kRlt, kBound, kSoc };

struct Cut {
  LinearInequality inequality;
  CutSource source = CutSource::kRlt;
  std::string label;      // "rlt1".."rlt4", "zlo", "zhi" or a family name.
  double residual = 0.0;  // Value of the inequality at the separated point.
};

// A valid inequality violated by p, or nullopt when p is in the hull.
std::optional<Cut> Separate(const HullDescription& d, const Point3& p);

struct EnvelopePair {
  double zmin = 0.0;
  double zmax = 0.0;
};

// Lower and upper envelope of the hull over (x, y); zmin > zmax means (x, y)
// is not in the hull's projection. Throws OutOfDomain outside the box.
EnvelopePair Envelopes(const HullDescription& d, double x, double y);

// Index of the piece whose cone gives the upper envelope at (x, y), or -1
// when a linear inequality or bound is binding instead.
int ActivePiece(const HullDescription& d, double x, double y);

// Lifted tangent inequality through (x, y) for the piece active there.
LiftedTangent LiftedTangentAt(const HullDescription& d, double x, double y);
LiftedTangent LiftedTangentAt(const NormalizedBounds& b, double x, double y);

// Symbolic disjunctive extended formulation. Variable 0..2 are x, y, z; block
// i owns lambda_i, x_i, y_i, z_i at indices 3 + 4 i .. 6 + 4 i.
struct LinearTerm {
  int var = 0;
  double coef = 0.0;
};
using LinearExpr = std::vector<LinearTerm>;

enum class RowSense { kEq, kGe };

struct LinearRow {
  LinearExpr expr;
  RowSense sense = RowSense::kGe;
  double rhs = 0.0;
  std::string label;
};

// ||(first, second)|| <= bound, all homogeneous linear expressions.
struct ConeRow {
  std::array<LinearExpr, 2> norm;
  LinearExpr bound;
  std::string label;
};

struct ExtendedFormulation {
  int num_blocks = 0;
  std::vector<std::string> variables;
  std::vector<LinearRow> rows;
  std::vector<ConeRow> cones;

  int NumAggregationRows() const;
  // Smallest residual over all rows and cones at `values` (equalities count
  // as -|lhs - rhs|).
  double MinResidual(const std::vector<double>& values) const;
};

ExtendedFormulation Disjunctive(const HullDescription& d);

}  // namespace xyhull

#endif  // XYHULL_HULL_H_
