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

#include "xyhull/hull.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "xyhull/errors.h"

namespace xyhull {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Region of (lx, ly) from the A-F lists; ties go to the earlier letter.
CaseTag RegionFromThresholds(double lx, double ly, double lz, double uz, double t) {
  const double s = std::sqrt(lz * uz);
  const double r = std::sqrt(lz / uz);
  if (lx >= s - t && ly >= s - t) return CaseTag::kRegionA;
  if (lx <= s + t && ly <= s + t) return CaseTag::kRegionB;
  if (lx <= s + t && ly <= r + t) return CaseTag::kRegionC;
  if (lx <= s + t) return CaseTag::kRegionD;
  if (lx <= r + t) return CaseTag::kRegionE;
  return CaseTag::kRegionF;
}

HullPiece Piece(SocConstraint soc, std::vector<HalfPlane> planes,
                bool globally_valid) {
  return {RegionPredicate{std::move(planes)}, std::move(soc), globally_valid};
}

// Pieces for bounds with lx <= ly whenever the case depends on orientation.
std::vector<HullPiece> CanonicalPieces(const NormalizedBounds& b, CaseTag tag,
                                       double t) {
  const double lx = b.lx;
  const double ly = b.ly;
  const double lz = b.lz;
  const double uz = b.uz;
  std::vector<HullPiece> pieces;
  switch (tag) {
    case CaseTag::kNoZBound:
      break;
    case CaseTag::kUpperOnly:
      if (lx <= t && ly <= t) {
        pieces.push_back(Piece(SocUpperZero(uz), {}, true));
      } else {
        pieces.push_back(Piece(SocUpperGeneral(lx, ly, uz), {}, true));
      }
      break;
    case CaseTag::kLowerOnly:
      pieces.push_back(Piece(SocLower(lz), {}, true));
      break;
    case CaseTag::kBothZeroLB:
    case CaseTag::kRegionB: {
      auto [side_x, side_y] = SocSides(lz, uz);
      pieces.push_back(Piece(SocCenter(lz, uz),
                             {{0.0, -uz, 1.0}, {0.0, 1.0, -uz}}, true));
      pieces.push_back(Piece(side_x, {{0.0, uz, -1.0}}, false));
      pieces.push_back(Piece(side_y, {{0.0, -1.0, uz}}, false));
      break;
    }
    case CaseTag::kRegionA: {
      const double low_slope = ly * ly / lz;
      const double high_slope = lz / (lx * lx);
      pieces.push_back(
          Piece(SocCenter(lz, uz),
                {{0.0, -low_slope, 1.0}, {0.0, high_slope, -1.0}}, true));
      pieces.push_back(Piece(SocUpperGeneral(lz / ly, ly, uz),
                             {{0.0, low_slope, -1.0}}, false));
      pieces.push_back(Piece(SocUpperGeneral(lx, lz / lx, uz),
                             {{0.0, -high_slope, 1.0}}, false));
      break;
    }
    case CaseTag::kRegionC: {
      const double low_slope = ly * ly / lz;
      pieces.push_back(
          Piece(SocCenter(lz, uz),
                {{0.0, -low_slope, 1.0}, {0.0, 1.0 / uz, -1.0}}, true));
      pieces.push_back(Piece(SocUpperGeneral(lz / ly, ly, uz),
                             {{0.0, low_slope, -1.0}}, false));
      pieces.push_back(
          Piece(SocSides(lz, uz).second, {{0.0, -1.0, uz}}, false));
      break;
    }
    case CaseTag::kRegionD: {
      const BoundaryLine line = DLine(ly, lz, uz);
      pieces.push_back(Piece(SocUpperGeneral(lz / ly, ly, uz),
                             {{line.a, line.b, -1.0}}, false));
      pieces.push_back(Piece(SocSides(lz, uz).second,
                             {{-line.a, -line.b, 1.0}}, false));
      break;
    }
    case CaseTag::kRegionE:
    case CaseTag::kRegionF:
      throw HullError("mirrored regions must be described via swapping");
  }
  return pieces;
}

bool InBox(const NormalizedBounds& b, double x, double y, double t) {
  return x >= b.lx - t && x <= 1.0 + t && y >= b.ly - t && y <= 1.0 + t;
}

double CoefNorm(const LinearInequality& c) {
  return std::sqrt(c.ax * c.ax + c.ay * c.ay + c.az * c.az);
}

// Position in the fixed tie-break order RLT, bounds, centre, sides, upper.
int FamilyRank(SocFamily f) {
  switch (f) {
    case SocFamily::kCenter:
      return 0;
    case SocFamily::kSideX:
    case SocFamily::kSideY:
    case SocFamily::kLower:
      return 1;
    case SocFamily::kUpperZero:
    case SocFamily::kUpperGeneral:
      return 2;
  }
  return 3;
}

bool IsLowerTangentFamily(const SocConstraint& c) {
  switch (c.family) {
    case SocFamily::kLower:
    case SocFamily::kSideX:
    case SocFamily::kSideY:
      return true;
    case SocFamily::kCenter:
      return c.params.lz > 0.0;
    default:
      return false;
  }
}

// Lifted tangent cut for a point violating `piece`'s cone.
std::optional<LinearInequality> SocCut(const HullPiece& piece,
                                       const Point3& p) {
  const double prod = p.x * p.y;
  const double lz = piece.soc.params.lz;
  if (IsLowerTangentFamily(piece.soc) && prod <= lz) {
    // (x, y) is below the curve xy = lz, which bounds the hull's projection.
    // Use the tangent at the radial projection onto the curve.
    if (!(prod > 0.0)) return std::nullopt;
    const double s = std::sqrt(lz / prod);
    return LinearInequality{-2.0 * lz, p.y * s, p.x * s, 0.0};
  }
  try {
    return TangentThrough(piece.soc, p.x, p.y).inequality;
  } catch (const OutOfDomain&) {
    return std::nullopt;
  }
}

// Pieces whose predicate holds at (x, y), with their envelope values.
std::vector<std::pair<int, double>> ApplicableEnvelopes(
    const HullDescription& d, double x, double y) {
  std::vector<std::pair<int, double>> out;
  for (int i = 0; i < static_cast<int>(d.pieces.size()); ++i) {
    const HullPiece& piece = d.pieces[i];
    if (!piece.predicate.Holds(x, y, d.tol.boundary_tol)) continue;
    out.emplace_back(i, EnvelopeZ(piece.soc, x, y));
  }
  return out;
}

double LinearUpper(const HullDescription& d, double x, double y) {
  double zmax = d.zhi;
  for (const LinearInequality& c : d.rlt) {
    if (c.az < 0.0) zmax = std::min(zmax, (c.a0 + c.ax * x + c.ay * y) / -c.az);
  }
  return zmax;
}

}  // namespace

std::string_view CaseName(CaseTag tag) {
  switch (tag) {
    case CaseTag::kNoZBound:
      return "NoZBound";
    case CaseTag::kUpperOnly:
      return "UpperOnly";
    case CaseTag::kLowerOnly:
      return "LowerOnly";
    case CaseTag::kBothZeroLB:
      return "BothZeroLB";
    case CaseTag::kRegionA:
      return "RegionA";
    case CaseTag::kRegionB:
      return "RegionB";
    case CaseTag::kRegionC:
      return "RegionC";
    case CaseTag::kRegionD:
      return "RegionD";
    case CaseTag::kRegionE:
      return "RegionE";
    case CaseTag::kRegionF:
      return "RegionF";
  }
  return "Unknown";
}

Classification Classify(const NormalizedBounds& b, const Tolerance& tol) {
  const double t = tol.boundary_tol;
  const bool lower = b.lz > b.lx * b.ly + t;
  const bool upper = b.uz < 1.0 - t;
  if (!lower && !upper) return {CaseTag::kNoZBound, false};
  if (!lower) return {CaseTag::kUpperOnly, false};
  if (!upper) return {CaseTag::kLowerOnly, false};
  if (std::abs(b.lx - b.lz) <= t && std::abs(b.ly - b.lz) <= t) {
    return {CaseTag::kBothZeroLB, false};
  }
  const CaseTag region = RegionFromThresholds(b.lx, b.ly, b.lz, b.uz, t);
  switch (region) {
    case CaseTag::kRegionE:
      return {CaseTag::kRegionC, true};
    case CaseTag::kRegionF:
      return {CaseTag::kRegionD, true};
    case CaseTag::kRegionA:
    case CaseTag::kRegionB:
      return {region, b.lx > b.ly + t};
    default:
      return {region, false};
  }
}

CaseTag RegionOf(const NormalizedBounds& b, const Tolerance& tol) {
  const Classification c = Classify(b, tol);
  if (c.tag == CaseTag::kNoZBound || c.tag == CaseTag::kUpperOnly ||
      c.tag == CaseTag::kLowerOnly) {
    return c.tag;
  }
  return RegionFromThresholds(b.lx, b.ly, b.lz, b.uz, tol.boundary_tol);
}

bool RegionPredicate::Holds(double x, double y, double boundary_tol) const {
  return std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
    return h.Value(x, y) >= -boundary_tol;
  });
}

RegionPredicate RegionPredicate::Mirrored() const {
  RegionPredicate m = *this;
  for (HalfPlane& h : m.planes) std::swap(h.ax, h.ay);
  return m;
}

BoundaryLine DLine(double ly, double lz, double uz) {
  const double denom = uz * ly - lz;
  if (!(denom > 0.0)) {
    throw DegenerateBounds("region-D line needs uz * ly > lz");
  }
  return {(uz * ly * ly - lz) / denom, ly * (1.0 - ly) / denom};
}

HullDescription Describe(const NormalizedBounds& b, const Tolerance& tol) {
  CheckNormalizedBounds(b);
  CheckTolerance(tol);
  HullDescription d;
  d.bounds = b;
  d.tol = tol;
  const Classification cls = Classify(b, tol);
  d.tag = cls.tag;
  d.swapped = cls.swapped;
  d.rlt = Rlt(b);
  d.zlo = b.lz;
  d.zhi = b.uz;
  const NormalizedBounds canonical =
      cls.swapped ? NormalizedBounds{b.ly, b.lx, b.lz, b.uz} : b;
  d.pieces = CanonicalPieces(canonical, cls.tag, tol.boundary_tol);
  if (cls.swapped) {
    for (HullPiece& piece : d.pieces) {
      piece.predicate = piece.predicate.Mirrored();
      piece.soc = piece.soc.Mirrored();
    }
  }
  return d;
}

WorstResidual Worst(const HullDescription& d, const Point3& p) {
  WorstResidual worst{kInf, ""};
  auto consider = [&worst](double r, std::string label) {
    if (r < worst.residual) worst = {r, std::move(label)};
  };
  for (int i = 0; i < 4; ++i) {
    consider(Evaluate(d.rlt[i], p), "rlt" + std::to_string(i + 1));
  }
  consider(p.z - d.zlo, "zlo");
  consider(d.zhi - p.z, "zhi");
  for (const HullPiece& piece : d.pieces) {
    if (!piece.predicate.Holds(p.x, p.y, d.tol.boundary_tol)) continue;
    consider(Evaluate(piece.soc, p), std::string(FamilyName(piece.soc.family)));
  }
  return worst;
}

bool IsMember(const HullDescription& d, const Point3& p) {
  return Worst(d, p).residual >= -d.tol.feas_tol;
}

std::optional<Cut> Separate(const HullDescription& d, const Point3& p) {
  const double feas = d.tol.feas_tol;
  std::optional<Cut> best;
  double best_score = 0.0;
  auto offer = [&](const LinearInequality& ineq, CutSource source,
                   std::string label) {
    const double r = Evaluate(ineq, p);
    if (!(r < -feas)) return;
    const double score = r / CoefNorm(ineq);
    if (!best || score < best_score) {
      best = Cut{ineq, source, std::move(label), r};
      best_score = score;
    }
  };
  for (int i = 0; i < 4; ++i) {
    offer(d.rlt[i], CutSource::kRlt, "rlt" + std::to_string(i + 1));
  }
  offer({-d.zlo, 0.0, 0.0, 1.0}, CutSource::kBound, "zlo");
  offer({d.zhi, 0.0, 0.0, -1.0}, CutSource::kBound, "zhi");

  std::vector<int> order(d.pieces.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&d](int a, int b) {
    return FamilyRank(d.pieces[a].soc.family) <
           FamilyRank(d.pieces[b].soc.family);
  });
  for (int i : order) {
    const HullPiece& piece = d.pieces[i];
    if (!piece.predicate.Holds(p.x, p.y, d.tol.boundary_tol)) continue;
    if (!(Evaluate(piece.soc, p) < -feas)) continue;
    if (auto cut = SocCut(piece, p)) {
      offer(*cut, CutSource::kSoc, std::string(FamilyName(piece.soc.family)));
    }
  }
  return best;
}

EnvelopePair Envelopes(const HullDescription& d, double x, double y) {
  if (!InBox(d.bounds, x, y, d.tol.boundary_tol)) {
    throw OutOfDomain("envelope query outside the box");
  }
  EnvelopePair e{d.zlo, LinearUpper(d, x, y)};
  for (const LinearInequality& c : d.rlt) {
    if (c.az > 0.0) e.zmin = std::max(e.zmin, -(c.a0 + c.ax * x + c.ay * y) / c.az);
  }
  for (const auto& [index, z] : ApplicableEnvelopes(d, x, y)) {
    e.zmax = std::min(e.zmax, z);
  }
  return e;
}

int ActivePiece(const HullDescription& d, double x, double y) {
  const double linear = LinearUpper(d, x, y);
  int best = -1;
  double best_z = kInf;
  for (const auto& [index, z] : ApplicableEnvelopes(d, x, y)) {
    if (z < best_z) {
      best = index;
      best_z = z;
    }
  }
  if (best >= 0 && best_z <= linear + d.tol.feas_tol) return best;
  return -1;
}

LiftedTangent LiftedTangentAt(const HullDescription& d, double x, double y) {
  const double t = d.tol.boundary_tol;
  if (!InBox(d.bounds, x, y, t)) {
    throw OutOfDomain("tangent point outside the box");
  }
  const double xy = x * y;
  if (xy < d.zlo - t || xy > d.zhi + t) {
    throw OutOfDomain("tangent point needs lz <= xy <= uz");
  }
  int best = -1;
  double best_z = kInf;
  for (const auto& [index, z] : ApplicableEnvelopes(d, x, y)) {
    if (z < best_z) {
      best = index;
      best_z = z;
    }
  }
  if (best < 0) {
    throw OutOfDomain("no curved facet: the hull is the RLT polytope");
  }
  return TangentThrough(d.pieces[best].soc, x, y);
}

LiftedTangent LiftedTangentAt(const NormalizedBounds& b, double x, double y) {
  return LiftedTangentAt(Describe(b), x, y);
}

int ExtendedFormulation::NumAggregationRows() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const LinearRow& r) {
        return r.label.rfind("agg_", 0) == 0;
      }));
}

double ExtendedFormulation::MinResidual(const std::vector<double>& values) const {
  auto eval = [&values](const LinearExpr& e) {
    double s = 0.0;
    for (const LinearTerm& t : e) s += t.coef * values.at(t.var);
    return s;
  };
  double worst = kInf;
  for (const LinearRow& r : rows) {
    const double lhs = eval(r.expr) - r.rhs;
    worst = std::min(worst, r.sense == RowSense::kEq ? -std::abs(lhs) : lhs);
  }
  for (const ConeRow& c : cones) {
    worst = std::min(worst,
                     eval(c.bound) - std::hypot(eval(c.norm[0]), eval(c.norm[1])));
  }
  return worst;
}

ExtendedFormulation Disjunctive(const HullDescription& d) {
  ExtendedFormulation f;
  f.num_blocks = std::max<int>(1, static_cast<int>(d.pieces.size()));
  f.variables = {"x", "y", "z"};
  for (int i = 1; i <= f.num_blocks; ++i) {
    const std::string s = std::to_string(i);
    for (const char* name : {"lambda_", "x_", "y_", "z_"}) {
      f.variables.push_back(name + s);
    }
  }
  for (int i = 0; i < f.num_blocks; ++i) {
    const int lam = 3 + 4 * i;
    const int vx = lam + 1;
    const int vy = lam + 2;
    const int vz = lam + 3;
    const std::string tag = "_" + std::to_string(i + 1);
    f.rows.push_back({{{lam, 1.0}}, RowSense::kGe, 0.0, "lambda" + tag});
    f.rows.push_back({{{vz, 1.0}, {lam, -d.zlo}}, RowSense::kGe, 0.0, "zlo" + tag});
    f.rows.push_back({{{lam, d.zhi}, {vz, -1.0}}, RowSense::kGe, 0.0, "zhi" + tag});
    for (int k = 0; k < 4; ++k) {
      const LinearInequality& c = d.rlt[k];
      f.rows.push_back({{{lam, c.a0}, {vx, c.ax}, {vy, c.ay}, {vz, c.az}},
                        RowSense::kGe,
                        0.0,
                        "rlt" + std::to_string(k + 1) + tag});
    }
    if (d.pieces.empty()) continue;
    const HullPiece& piece = d.pieces[i];
    for (size_t k = 0; k < piece.predicate.planes.size(); ++k) {
      const HalfPlane& h = piece.predicate.planes[k];
      f.rows.push_back({{{lam, h.a0}, {vx, h.ax}, {vy, h.ay}},
                        RowSense::kGe,
                        0.0,
                        "region" + std::to_string(k + 1) + tag});
    }
    const SocConstraint& s = piece.soc;
    ConeRow cone;
    cone.label = std::string(FamilyName(s.family)) + tag;
    for (int r = 0; r < 2; ++r) {
      cone.norm[r] = {{lam, s.b[r]}, {vx, s.a[r][0]}, {vy, s.a[r][1]},
                      {vz, s.a[r][2]}};
    }
    cone.bound = {{lam, s.d}, {vx, s.c[0]}, {vy, s.c[1]}, {vz, s.c[2]}};
    f.cones.push_back(std::move(cone));
  }
  for (int axis = 0; axis < 3; ++axis) {
    LinearRow agg{{{axis, 1.0}}, RowSense::kEq, 0.0,
                  std::string("agg_") + "xyz"[axis]};
    for (int i = 0; i < f.num_blocks; ++i) {
      agg.expr.push_back({4 + 4 * i + axis, -1.0});
    }
    f.rows.push_back(std::move(agg));
  }
  LinearRow weights{{}, RowSense::kEq, 1.0, "agg_lambda"};
  for (int i = 0; i < f.num_blocks; ++i) weights.expr.push_back({3 + 4 * i, 1.0});
  f.rows.push_back(std::move(weights));
  return f;
}

}  // namespace xyhull
