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

#include "xyhull/bounds.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xyhull/errors.h"

namespace xyhull {
namespace {

constexpr int kMaxTightenPasses = 10;

bool AllFinite(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

void CheckTolerance(const Tolerance& t) {
  if (!(t.feas_tol > 0.0) || !(t.boundary_tol > 0.0)) {
    throw InfeasibleBounds("tolerances must be strictly positive");
  }
}

void CheckRawBounds(const RawBounds& b) {
  if (!AllFinite({b.lx, b.ly, b.lz, b.ux, b.uy, b.uz})) {
    throw InfeasibleBounds("bounds must be finite");
  }
  if (b.lx < 0.0 || b.ly < 0.0 || b.lz < 0.0) {
    throw InfeasibleBounds("lower bounds must be nonnegative");
  }
  if (!(b.lx < b.ux) || !(b.ly < b.uy) || !(b.lz < b.uz)) {
    throw InfeasibleBounds("each lower bound must be below its upper bound");
  }
  if (b.lx * b.ly > b.uz) {
    throw InfeasibleBounds("lx * ly exceeds uz: no point with z = xy");
  }
  if (b.lz > b.ux * b.uy) {
    throw InfeasibleBounds("lz exceeds ux * uy: no point with z = xy");
  }
}

void CheckNormalizedBounds(const NormalizedBounds& b) {
  if (!AllFinite({b.lx, b.ly, b.lz, b.uz})) {
    throw InfeasibleBounds("bounds must be finite");
  }
  if (b.lx < 0.0 || b.ly < 0.0 || b.lz < 0.0 || b.lx >= 1.0 || b.ly >= 1.0) {
    throw InfeasibleBounds("normalized bounds need 0 <= lx, ly < 1, lz >= 0");
  }
  if (!(b.lz < b.uz) || b.uz > 1.0) {
    throw InfeasibleBounds("normalized bounds need lz < uz <= 1");
  }
  if (b.lx * b.ly > b.uz) {
    throw InfeasibleBounds("lx * ly exceeds uz");
  }
}

Normalized Normalize(const RawBounds& b) {
  CheckRawBounds(b);
  Normalized out;
  out.scaling = {b.ux, b.uy};
  const double area = b.ux * b.uy;
  NormalizedBounds& n = out.bounds;
  n.lx = b.lx / b.ux;
  n.ly = b.ly / b.uy;
  n.uz = std::min(b.uz / area, 1.0);
  n.lz = std::max(b.lz / area, n.lx * n.ly);
  if (!(n.lz < n.uz)) {
    throw InfeasibleBounds("feasible set is a single point");
  }
  return out;
}

NormalizedBounds Tighten(const NormalizedBounds& b, Scaling* rescale) {
  CheckNormalizedBounds(b);
  NormalizedBounds cur = b;
  Scaling extra;
  int pass = 0;
  for (; pass < kMaxTightenPasses; ++pass) {
    const NormalizedBounds prev = cur;
    // x >= lz / uy and y >= lz / ux.
    cur.lx = std::max(cur.lx, cur.lz);
    cur.ly = std::max(cur.ly, cur.lz);
    // x <= uz / ly: shrink the x range to [lx, uz / ly] and stretch it back to
    // unit length. The new uz equals ly exactly.
    if (cur.ly > cur.uz) {
      const double s = cur.uz / cur.ly;
      cur.lx /= s;
      cur.lz /= s;
      cur.uz = cur.ly;
      extra.sx *= s;
    }
    if (cur.lx > cur.uz) {
      const double s = cur.uz / cur.lx;
      cur.ly = std::min(cur.ly / s, cur.lx);
      cur.lz /= s;
      cur.uz = cur.lx;
      extra.sy *= s;
    }
    cur.lz = std::max(cur.lz, cur.lx * cur.ly);
    if (!(cur.lz < cur.uz) || cur.lx >= 1.0 || cur.ly >= 1.0) {
      throw InfeasibleBounds("tightening empties the box");
    }
    if (cur == prev) break;
  }
  if (pass == kMaxTightenPasses) {
    throw HullError("bound tightening did not reach a fixed point");
  }
  if (rescale != nullptr) *rescale = rescale->Then(extra);
  return cur;
}

Instance Prepare(const RawBounds& raw) {
  Normalized n = Normalize(raw);
  Instance inst;
  inst.raw = raw;
  inst.scaling = n.scaling;
  inst.bounds = Tighten(n.bounds, &inst.scaling);
  return inst;
}

Point3 ToNormalized(const Point3& p, const Scaling& s) {
  return {p.x / s.sx, p.y / s.sy, p.z / (s.sx * s.sy)};
}

Point3 FromNormalized(const Point3& p, const Scaling& s) {
  return {p.x * s.sx, p.y * s.sy, p.z * (s.sx * s.sy)};
}

std::string DebugString(const NormalizedBounds& b) {
  std::ostringstream out;
  out << "{lx=" << b.lx << ", ly=" << b.ly << ", lz=" << b.lz
      << ", uz=" << b.uz << "}";
  return out.str();
}

}  // namespace xyhull
