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

#include "curvident/metric_jet.hpp"
#include "curvident/tensor.hpp"

namespace curvident {

// Fully covariant curvature R_{abcd} at the base point, from
//   R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj}
//               - G^i_{lm} G^m_{kj}
// lowered on the first slot with g(0). Needs degree >= 2.
Tensor riemann(const MetricJet& g);

// Ric_{bd} = g^{ac} R_{abcd}
Tensor ricci(const MetricJet& g);
Rational scalar_curvature(const MetricJet& g);
// Ric - (r / 2) g(0)
Tensor einstein(const MetricJet& g);

// The same contractions starting from an already computed curvature tensor.
Tensor ricci_from_riemann(const Tensor& riemann, const Tensor& metric);
Rational scalar_from_ricci(const Tensor& ricci, const Tensor& metric);

}  // namespace curvident
