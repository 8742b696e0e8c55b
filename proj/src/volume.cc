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

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "xyhull/errors.h"
#include "xyhull/parallel.h"

namespace xyhull {
namespace {

constexpr std::int64_t kMcChunk = 1 << 16;
constexpr double kInnerTol = 1e-11;
constexpr double kInnerAbsTol = 1e-14;
constexpr unsigned kInnerDepth = 14;

void CheckSplit(double b) {
  if (!(b >= 0.0 && b <= 1.0)) throw OutOfDomain("split point must lie in [0, 1]");
}

double BLogB(double b) { return b > 0.0 ? b * std::log(b) : 0.0; }

// Values of y in (ly, 1) where two linear rows cross, a piece boundary lies
// or xy reaches a product bound, at fixed x. The height has kinks there.
std::vector<double> Breaks(const HullDescription& d, double x) {
  // z = c + m y for each linear row.
  std::vector<std::pair<double, double>> lines;
  for (const LinearInequality& r : d.rlt) {
    lines.push_back({-(r.a0 + r.ax * x) / r.az, -r.ay / r.az});
  }
  lines.push_back({d.zlo, 0.0});
  lines.push_back({d.zhi, 0.0});
  std::vector<double> ys = {d.bounds.ly, 1.0};
  auto add = [&](double num, double den) {
    if (std::abs(den) < 1e-14) return;
    const double y = -num / den;
    if (y > d.bounds.ly && y < 1.0) ys.push_back(y);
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      add(lines[i].first - lines[j].first, lines[i].second - lines[j].second);
    }
  }
  // Curves xy = zlo and xy = zhi.
  if (x > 0.0) {
    add(-d.zlo, x);
    add(-d.zhi, x);
  }
  for (const HullPiece& piece : d.pieces) {
    for (const HalfPlane& h : piece.predicate.planes) add(h.a0 + h.ax * x, h.ay);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

// Integral over [ly, 1] of the hull height at x.
double Slice(const HullDescription& d, double x) {
  auto height = [&d, x](double y) {
    const EnvelopePair e = Envelopes(d, x, y);
    return std::max(0.0, e.zmax - e.zmin);
  };
  using boost::math::quadrature::gauss_kronrod;
  using Rule = gauss_kronrod<double, 31>;
  const std::vector<double> ys = Breaks(d, x);
  const std::size_t n = ys.size() - 1;
  // One pass without refinement, then refine the parts whose error exceeds
  // kInnerTol times the whole slice or kInnerAbsTol.
  std::vector<double> value(n), error(n), l1(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    value[i] = Rule::integrate(height, ys[i], ys[i + 1], 0, 0.0, &error[i], &l1[i]);
    total += l1[i];
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = std::max(kInnerTol * total, kInnerAbsTol);
    if (error[i] > target) {
      value[i] = Rule::integrate(height, ys[i], ys[i + 1], kInnerDepth,
                                 target / l1[i]);
    }
    sum += value[i];
  }
  return sum;
}

double Composite(const HullDescription& d, int panels) {
  using boost::math::quadrature::gauss;
  const double lx = d.bounds.lx;
  const double h = (1.0 - lx) / panels;
  std::vector<double> parts(panels);
  ParallelFor(panels, [&](std::size_t i) {
    const double a = lx + h * i;
    const double b = i + 1 == static_cast<std::size_t>(panels) ? 1.0 : a + h;
    parts[i] = gauss<double, 5>::integrate(
        [&d](double x) { return Slice(d, x); }, a, b);
  });
  double sum = 0.0;
  for (double p : parts) sum += p;
  return sum;
}

double Uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

double VolRltCut(Side side, double b) {
  CheckSplit(b);
  if (side == Side::kUpper) return b * (b * b - 3.0 * b + 3.0) / 6.0;
  return (1.0 - b) * (1.0 - b) * (1.0 - b) / 6.0;
}

double VolHull(Side side, double b) {
  CheckSplit(b);
  if (side == Side::kUpper) {
    return b / 6.0 * (3.0 + 2.0 * BLogB(b) - b - b * b);
  }
  return (1.0 - b) / 6.0 * (1.0 + 2.0 * BLogB(b) - b * b);
}

Estimate VolNumeric(const HullDescription& d, int grid_n) {
  if (grid_n < 16) throw OutOfDomain("grid_n must be at least 16");
  const double fine = Composite(d, grid_n);
  const double coarse = Composite(d, grid_n / 2);
  return {fine, std::abs(fine - coarse)};
}

McEstimate VolMc(const HullDescription& d, std::int64_t samples,
                 std::uint64_t seed) {
  if (samples < 1000) throw OutOfDomain("at least 1000 samples are required");
  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  const NormalizedBounds& b = d.bounds;
  const double width_z = d.zhi - d.zlo;
  if (!(width_z > 0.0)) return out;
  const double box = (1.0 - b.lx) * (1.0 - b.ly) * width_z;
  const std::int64_t chunks = (samples + kMcChunk - 1) / kMcChunk;
  std::vector<std::int64_t> hits(chunks, 0);
  ParallelFor(chunks, [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c),
                      static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 gen(seq);
    const std::int64_t begin = static_cast<std::int64_t>(c) * kMcChunk;
    const std::int64_t count = std::min(kMcChunk, samples - begin);
    std::int64_t h = 0;
    for (std::int64_t k = 0; k < count; ++k) {
      const double x = b.lx + (1.0 - b.lx) * Uniform01(gen);
      const double y = b.ly + (1.0 - b.ly) * Uniform01(gen);
      const double z = d.zlo + width_z * Uniform01(gen);
      if (IsMember(d, {x, y, z})) ++h;
    }
    hits[c] = h;
  });
  for (std::int64_t h : hits) out.hits += h;
  const double p = static_cast<double>(out.hits) / samples;
  out.value = box * p;
  out.sigma = box * std::sqrt(p * (1.0 - p) / samples);
  return out;
}

std::optional<double> ClosedFormVolume(const HullDescription& d) {
  const double t = d.tol.boundary_tol;
  if (d.bounds.lx > t || d.bounds.ly > t) return std::nullopt;
  switch (d.tag) {
    case CaseTag::kNoZBound:
      return 1.0 / 6.0;
    case CaseTag::kUpperOnly:
      return VolHull(Side::kUpper, d.bounds.uz);
    case CaseTag::kLowerOnly:
      return VolHull(Side::kLower, d.bounds.lz);
    default:
      return std::nullopt;
  }
}

double BranchPoint() {
  // h(b) = ln b - 2 (b - 1) is negative near 0 and positive at 1/2.
  double lo = 1e-6;
  double hi = 0.5;
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (std::log(mid) - 2.0 * (mid - 1.0) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<RatioPoint> RatioCurve(const std::vector<double>& bs) {
  std::vector<RatioPoint> out;
  out.reserve(bs.size());
  for (double b : bs) {
    const double up = VolHull(Side::kUpper, b);
    const double low = VolHull(Side::kLower, b);
    const double up_cut = VolRltCut(Side::kUpper, b);
    const double low_cut = VolRltCut(Side::kLower, b);
    out.push_back({b, up_cut > 0.0 ? up / up_cut : 1.0,
                   low_cut > 0.0 ? low / low_cut : 1.0, 6.0 * (up + low)});
  }
  return out;
}

BranchReport OptimalBranch(int curve_points) {
  if (curve_points < 0) throw OutOfDomain("curve_points must be nonnegative");
  BranchReport r;
  r.b_star = BranchPoint();
  r.sum_ratio =
      6.0 * (VolHull(Side::kUpper, r.b_star) + VolHull(Side::kLower, r.b_star));
  r.reduction = 1.0 - r.sum_ratio;
  std::vector<double> bs;
  for (int k = 1; k <= curve_points; ++k) {
    bs.push_back(static_cast<double>(k) / (curve_points + 1));
  }
  r.curve = RatioCurve(bs);
  return r;
}

}  // namespace xyhull
