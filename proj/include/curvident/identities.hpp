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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "curvident/metric_jet.hpp"
#include "curvident/permutation.hpp"
#include "curvident/tensor.hpp"

namespace curvident {

// One vanishing experiment: `trials` random degree-2 jets of the given
// dimension and signature, trial t drawn from seed + t.
struct IdentityJob {
  std::size_t pbar = 0;
  std::size_t k = 0;
  std::size_t dim = 0;
  Signature signature;
  std::size_t trials = 20;
  std::uint64_t seed = 0;

  static constexpr std::size_t max_dim = 6;

  // Throws ExceptionalCase for (0,0) and (1,0), CapExceeded above max_dim,
  // InvalidArgument for zero trials or a signature of the wrong size.
  void validate() const;

  int weight() const { return 2 * (static_cast<int>(pbar) - static_cast<int>(k)); }
  std::size_t critical_dim() const { return 2 * k + pbar; }
  bool predicts_vanishing() const { return dim < critical_dim(); }
};

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool exact_zero = true;
  // First nonzero component (row-major), when there is one.
  std::vector<std::size_t> witness_index;
  Rational witness_value;
};

// Ratio a = c * b established on a reference jet and re-checked on every
// trial.
struct ProportionalityConstant {
  Rational value;
  bool consistent = true;
};

struct IdentityReport {
  IdentityJob job;
  std::vector<TrialResult> results;  // sorted by trial
  Integer max_abs_numerator;
  std::map<std::string, ProportionalityConstant> constants;

  bool identity_holds() const;
  bool matches_prediction() const;
};

// The 2pbar-covariant tensor
//   S_{i_1..i_2pbar} = R^{a_1a_2,b_1b_2} .. R^{a_{2k-1}a_{2k},b_{2k-1}b_{2k}}
//       delta^{c_1..c_2k j_1..j_pbar}_{b_1..b_2k i_1..i_pbar}
//       g_{a_1c_1} .. g_{a_2k c_2k} g_{j_1 i_{pbar+1}} .. g_{j_pbar i_2pbar}
// at the base point. pbar = 0 gives a scalar (rank-0 tensor).
Tensor s_tensor(std::size_t pbar, std::size_t k, const MetricJet& g);

// Same, from a covariant curvature tensor and the metric at the point.
Tensor s_tensor_from_curvature(std::size_t pbar, std::size_t k,
                               const Tensor& riemann, const Tensor& metric);

// (sigma . S)(D_1, .., D_2pbar) = S(D_sigma(1), .., D_sigma(2pbar))
Tensor permuted_s(const Permutation& sigma, std::size_t pbar, std::size_t k,
                  const MetricJet& g);

// sum over permutations a, b of {1..n} of
//   eps(a) eps(b) R_{a_1a_2b_1b_2} .. R_{a_{n-1}a_n b_{n-1}b_n}
// with coordinate permutation symbols. Throws InvalidArgument for odd n.
Rational pfaffian_density(const MetricJet& g);

// c with a == c * b, or nullopt when none exists (b zero while a is not,
// or the tensors are not parallel). a == b == 0 gives nullopt as well.
std::optional<Rational> proportionality(const Tensor& a, const Tensor& b);

IdentityReport verify_vanishing(const IdentityJob& job);

// s_tensor(rescale(g, lambda2)) == lambda2^(pbar - k) * s_tensor(g)
bool homogeneity_check(std::size_t pbar, std::size_t k, const MetricJet& g,
                       const Rational& lambda2);

// restrict(s_tensor(g + dt^2)) == s_tensor(g)
bool universality_check(std::size_t pbar, std::size_t k, const MetricJet& g);

nlohmann::json to_json(const IdentityJob& job);
nlohmann::json to_json(const IdentityReport& report);

}  // namespace curvident
