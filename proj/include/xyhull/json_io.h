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

#ifndef XYHULL_JSON_IO_H_
#define XYHULL_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "xyhull/bounds.h"
#include "xyhull/constraints.h"
#include "xyhull/hull.h"
#include "xyhull/volume.h"

namespace xyhull {

using Json = nlohmann::ordered_json;

// Rounds to 9 significant digits; all serialized reals pass through here.
double Round9(double v);
// The same value as printed text.
std::string Format9(double v);

Json ToJson(const RawBounds& b);
Json ToJson(const NormalizedBounds& b);
Json ToJson(const Scaling& s);
Json ToJson(const Point3& p);
Json ToJson(const LinearInequality& c);
Json ToJson(const SocConstraint& c);
Json ToJson(const RegionPredicate& p);
Json ToJson(const TangentSegment& s);
Json ToJson(const LiftedTangent& t);
Json ToJson(const HullDescription& d);
Json ToJson(const Estimate& e);
Json ToJson(const McEstimate& e);
Json ToJson(const VolumeReport& r);
Json ToJson(const RatioPoint& p);
Json ToJson(const BranchReport& r);

}  // namespace xyhull

#endif  // XYHULL_JSON_IO_H_
