// Copyright 2026 The curvident Authors.
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace curvident {

// Bad shapes, out-of-range slots, invalid signatures and similar caller errors.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale cap (slot count, dimension) was exceeded.
class CapExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Non-invertible metric or constant term of a metric jet.
class SingularMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A jet was truncated below the order an operation needs.
class InsufficientDegree : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// (pbar, k) = (0, 0) or (1, 0): the weight is too high for any curvature
// identity to exist.
class ExceptionalCase : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Two independent random sample batches gave different ranks.
class RankNotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace curvident
