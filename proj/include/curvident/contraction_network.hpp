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

#include <span>
#include <vector>

#include "curvident/tensor.hpp"

namespace curvident {

// A tensor whose slots carry integer labels.
struct LabeledTensor {
  Tensor tensor;
  std::vector<int> labels;
};

// Evaluates a tensor network. Every label occurs either twice among the
// factors (summed, each summed value v weighted by pairing_weights[v]) or
// once among the factors and once in output_labels. The result has one
// covariant slot per output label, in that order.
//
// pairing_weights is the diagonal of the inverse metric in the chosen basis,
// so an orthonormal frame of signature (p, q) passes p ones then q minus ones.
//
// Factors are combined pairwise, cheapest union of labels first.
Tensor contract_network(std::vector<LabeledTensor> factors,
                        std::span<const int> output_labels,
                        std::span<const Rational> pairing_weights);

}  // namespace curvident
