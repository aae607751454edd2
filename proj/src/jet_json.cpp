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

#include "curvident/jet_json.hpp"

#include "curvident/errors.hpp"

namespace curvident {

using nlohmann::json;

json jet_to_json(const MetricJet& g) {
  json coefficients = json::array();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b)
      for (const auto& [e, c] : g.component(a, b).terms()) {
        json exps = json::array();
        for (const auto x : e) exps.push_back(static_cast<int>(x));
        coefficients.push_back({{"indices", {a, b}},
                                {"exponents", std::move(exps)},
                                {"numerator", c.get_num().get_str()},
                                {"denominator", c.get_den().get_str()}});
      }
  return {{"dim", g.dim()},
          {"degree", g.degree()},
          {"signature", {g.signature().plus, g.signature().minus}},
          {"coefficients", std::move(coefficients)}};
}

namespace {

std::string integer_text(const json& v, const char* field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw InvalidArgument(std::string("jet JSON: bad ") + field);
}

}  // namespace

MetricJet jet_from_json(const json& doc) {
  try {
    const auto dim = doc.at("dim").get<std::size_t>();
    const auto degree = doc.at("degree").get<std::size_t>();
    const auto& sig = doc.at("signature");
    const Signature signature{sig.at(0).get<std::size_t>(),
                              sig.at(1).get<std::size_t>()};
    if (signature.dim() != dim)
      throw InvalidArgument("jet JSON: signature does not match dim");
    MetricJet g(signature, degree);
    std::vector<TruncatedPolynomial> parts;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a; b < dim; ++b)
        parts.emplace_back(dim, degree);
    const auto part_index = [dim](std::size_t a, std::size_t b) {
      return a * dim - a * (a - 1) / 2 + (b - a);
    };
    for (const auto& entry : doc.at("coefficients")) {
      const auto a = entry.at("indices").at(0).get<std::size_t>();
      const auto b = entry.at("indices").at(1).get<std::size_t>();
      if (a > b || b >= dim) throw InvalidArgument("jet JSON: bad indices");
      Exponents e;
      for (const auto& x : entry.at("exponents")) {
        const auto v = x.get<int>();
        if (v < 0 || v > 255) throw InvalidArgument("jet JSON: bad exponent");
        e.push_back(static_cast<std::uint8_t>(v));
      }
      const auto value =
          make_rational(integer_text(entry.at("numerator"), "numerator"),
                        integer_text(entry.at("denominator"), "denominator"));
      auto& p = parts[part_index(a, b)];
      if (!is_zero(p.coefficient(e)))
        throw InvalidArgument("jet JSON: duplicate coefficient");
      p.set_coefficient(e, value);
    }
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a; b < dim; ++b)
        g.set_component(a, b, parts[part_index(a, b)]);
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("jet JSON: ") + e.what());
  }
}

}  // namespace curvident
