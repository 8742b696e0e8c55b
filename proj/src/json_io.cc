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

#include "xyhull/json_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace xyhull {

double Round9(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return std::strtod(buf, nullptr);
}

std::string Format9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

Json ToJson(const RawBounds& b) {
  return {{"lx", Round9(b.lx)}, {"ly", Round9(b.ly)}, {"lz", Round9(b.lz)},
          {"ux", Round9(b.ux)}, {"uy", Round9(b.uy)}, {"uz", Round9(b.uz)}};
}

Json ToJson(const NormalizedBounds& b) {
  return {{"lx", Round9(b.lx)}, {"ly", Round9(b.ly)}, {"lz", Round9(b.lz)},
          {"uz", Round9(b.uz)}};
}

Json ToJson(const Scaling& s) {
  return {{"sx", Round9(s.sx)}, {"sy", Round9(s.sy)}};
}

Json ToJson(const Point3& p) {
  return Json::array({Round9(p.x), Round9(p.y), Round9(p.z)});
}

Json ToJson(const LinearInequality& c) {
  return {{"type", "linear"}, {"a0", Round9(c.a0)}, {"ax", Round9(c.ax)},
          {"ay", Round9(c.ay)}, {"az", Round9(c.az)}};
}

Json ToJson(const SocConstraint& c) {
  Json a = Json::array();
  for (const auto& row : c.a) {
    a.push_back({Round9(row[0]), Round9(row[1]), Round9(row[2])});
  }
  return {{"type", "soc"},
          {"A", a},
          {"b", {Round9(c.b[0]), Round9(c.b[1])}},
          {"c", {Round9(c.c[0]), Round9(c.c[1]), Round9(c.c[2])}},
          {"d", Round9(c.d)},
          {"family", FamilyName(c.family)},
          {"params",
           {{"lx", Round9(c.params.lx)},
            {"ly", Round9(c.params.ly)},
            {"lz", Round9(c.params.lz)},
            {"uz", Round9(c.params.uz)}}},
          {"mirrored", c.mirrored}};
}

Json ToJson(const RegionPredicate& p) {
  Json planes = Json::array();
  for (const HalfPlane& h : p.planes) {
    planes.push_back(
        {{"a0", Round9(h.a0)}, {"ax", Round9(h.ax)}, {"ay", Round9(h.ay)}});
  }
  return planes;
}

Json ToJson(const TangentSegment& s) {
  return {{"family", FamilyName(s.family)},
          {"lower", ToJson(s.lower)},
          {"upper", ToJson(s.upper)},
          {"alpha", Round9(s.alpha)}};
}

Json ToJson(const LiftedTangent& t) {
  return {{"inequality", ToJson(t.inequality)}, {"segment", ToJson(t.segment)}};
}

Json ToJson(const HullDescription& d) {
  Json rlt = Json::array();
  for (const LinearInequality& c : d.rlt) rlt.push_back(ToJson(c));
  Json pieces = Json::array();
  for (const HullPiece& p : d.pieces) {
    pieces.push_back({{"predicate", ToJson(p.predicate)},
                      {"soc", ToJson(p.soc)},
                      {"global", p.globally_valid}});
  }
  return {{"bounds", ToJson(d.bounds)},
          {"case", CaseName(d.tag)},
          {"swapped", d.swapped},
          {"rlt", rlt},
          {"zlo", Round9(d.zlo)},
          {"zhi", Round9(d.zhi)},
          {"pieces", pieces}};
}

Json ToJson(const Estimate& e) {
  return {{"value", Round9(e.value)}, {"error", Round9(e.error)}};
}

Json ToJson(const McEstimate& e) {
  return {{"value", Round9(e.value)},
          {"sigma", Round9(e.sigma)},
          {"three_sigma", Round9(3.0 * e.sigma)},
          {"samples", e.samples},
          {"hits", e.hits},
          {"seed", e.seed}};
}

Json ToJson(const VolumeReport& r) {
  Json j;
  j["closed_form"] = r.closed_form ? Json(Round9(*r.closed_form)) : Json(nullptr);
  if (r.numeric) {
    j["numeric_integration"] = ToJson(*r.numeric);
    j["numeric_integration"]["grid_n"] = r.grid_n;
  } else {
    j["numeric_integration"] = nullptr;
  }
  j["monte_carlo"] = r.monte_carlo ? ToJson(*r.monte_carlo) : Json(nullptr);
  return j;
}

Json ToJson(const RatioPoint& p) {
  return {{"b", Round9(p.b)},
          {"ub_ratio", Round9(p.ub_ratio)},
          {"lb_ratio", Round9(p.lb_ratio)},
          {"sum_ratio", Round9(p.sum_ratio)}};
}

Json ToJson(const BranchReport& r) {
  Json curve = Json::array();
  for (const RatioPoint& p : r.curve) curve.push_back(ToJson(p));
  return {{"b_star", Round9(r.b_star)},
          {"sum_ratio", Round9(r.sum_ratio)},
          {"reduction", Round9(r.reduction)},
          {"reduction_percent", Round9(100.0 * r.reduction)},
          {"curve", curve}};
}

}  // namespace xyhull
