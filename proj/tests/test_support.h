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

#ifndef XYHULL_TESTS_TEST_SUPPORT_H_
#define XYHULL_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "xyhull/bounds.h"
#include "xyhull/hull.h"

namespace xyhull::testing {

struct NamedCase {
  std::string name;
  RawBounds raw;
};

// The eight reference configurations from the figure captions.
inline std::vector<NamedCase> ReferenceCases() {
  return {
      {"UpperOnly(0.4)", {0.0, 0.0, 0.0, 1.0, 1.0, 0.4}},
      {"LowerOnly(0.2)", {0.0, 0.0, 0.2, 1.0, 1.0, 1.0}},
      {"BothZeroLB(0.2,0.7)", {0.0, 0.0, 0.2, 1.0, 1.0, 0.7}},
      {"RegionA(0.32,0.28)", {0.32, 0.28, 0.1, 1.0, 1.0, 0.7}},
      {"RegionB(0.14,0.2)", {0.14, 0.2, 0.1, 1.0, 1.0, 0.7}},
      {"RegionC(0.14,0.3)", {0.14, 0.3, 0.1, 1.0, 1.0, 0.7}},
      {"RegionD(0.14,0.5)", {0.14, 0.5, 0.1, 1.0, 1.0, 0.7}},
      {"LowerOnlyGeneral(0.5,0.3,0.3)", {0.5, 0.3, 0.3, 1.0, 1.0, 1.0}},
  };
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double Uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int Index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }

 private:
  std::mt19937_64 gen_;
};

// Uniform point of F' (rejection from the box).
inline Point3 SurfacePoint(const NormalizedBounds& b, Rng& rng) {
  for (;;) {
    const double x = rng.Uniform(b.lx, 1.0);
    const double y = rng.Uniform(b.ly, 1.0);
    const double z = x * y;
    if (z >= b.lz && z <= b.uz) return {x, y, z};
  }
}

// Random convex combination of `k` points of F'.
inline Point3 HullPoint(const NormalizedBounds& b, Rng& rng, int k = 3) {
  std::vector<double> w(k);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(rng.Uniform(1e-12, 1.0));
    total += v;
  }
  Point3 p{0.0, 0.0, 0.0};
  for (int i = 0; i < k; ++i) {
    const Point3 q = SurfacePoint(b, rng);
    p.x += w[i] / total * q.x;
    p.y += w[i] / total * q.y;
    p.z += w[i] / total * q.z;
  }
  return p;
}

}  // namespace xyhull::testing

#endif  // XYHULL_TESTS_TEST_SUPPORT_H_
