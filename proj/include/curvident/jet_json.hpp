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

#include "json.hpp"

#include "curvident/metric_jet.hpp"

namespace curvident {

// {"dim", "degree", "signature": [plus, minus], "coefficients": [{"indices":
// [a, b], "exponents": [...], "numerator": "p", "denominator": "q"}]}
//
// Indices are 0-based with a <= b; numerators and denominators are decimal
// strings so arbitrary precision survives a round trip. Coefficients are
// listed by (a, b) and then by exponent vector, so equal jets serialize to
// identical text.
nlohmann::json jet_to_json(const MetricJet& g);

// Inverse of jet_to_json. Integer JSON numbers are also accepted for the
// numerator and denominator. Throws InvalidArgument on malformed input.
MetricJet jet_from_json(const nlohmann::json& doc);

}  // namespace curvident
