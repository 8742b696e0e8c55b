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

#ifndef XYHULL_ERRORS_H_
#define XYHULL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace xyhull {

// Base class of every error raised by the library.
class HullError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The bounds describe an empty (or single-point) feasible set.
class InfeasibleBounds : public HullError {
 public:
  using HullError::HullError;
};

// A constructor was called with parameters on which its formula degenerates.
class DegenerateBounds : public HullError {
 public:
  using HullError::HullError;
};

// A query point lies outside the domain of the requested operation.
class OutOfDomain : public HullError {
 public:
  using HullError::HullError;
};

// An envelope discriminant fell below the clamp threshold; the constraint was
// evaluated away from the region it describes.
class NegativeDiscriminant : public HullError {
 public:
  using HullError::HullError;
};

// The oracle LP has no feasible convex combination.
class LpInfeasible : public HullError {
 public:
  using HullError::HullError;
};

}  // namespace xyhull

#endif  // XYHULL_ERRORS_H_
