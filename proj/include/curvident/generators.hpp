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
#include <span>
#include <string>
#include <vector>

#include "curvident/exact_linalg.hpp"
#include "curvident/matchings.hpp"
#include "curvident/metric_jet.hpp"
#include "curvident/tensor.hpp"

namespace curvident {

// Multi-index D = (d_2, .., d_r) plus pbar. Slots are laid out factor by
// factor in increasing order j (each N_j factor takes j + 2 slots: the
// symmetric pair first, then the j symmetric slots), followed by the 2 pbar
// free slots.
struct SlotSignature {
  std::size_t pbar = 0;
  std::vector<std::size_t> d;  // d[j - 2] = d_j

  struct Factor {
    std::size_t order;       // j
    std::size_t first_slot;  // j + 2 consecutive slots
  };

  std::vector<Factor> factors() const;
  std::size_t slot_count() const;  // sum d_j (j + 2) + 2 pbar
  std::size_t free_begin() const { return slot_count() - 2 * pbar; }
  std::size_t weight_sum() const;  // sum j d_j
  std::size_t max_order() const { return d.size() + 1; }
  std::string to_string() const;  // "(2,0,0)"

  friend bool operator==(const SlotSignature&, const SlotSignature&) = default;
};

// All D with 2 d_2 + 3 d_3 + .. + r d_r = 2 pbar - w = 2k, r = 2k, in
// decreasing lexicographic order. Throws ExceptionalCase for (0,0), (1,0).
std::vector<SlotSignature> admissible_signatures(std::size_t pbar,
                                                 std::size_t k);

// Slot permutations (as image vectors) preserving the value of every
// contraction: the first pair of each factor, its last j slots, and
// factors of equal order. Free slots are fixed.
std::vector<std::vector<std::size_t>> slot_symmetries(const SlotSignature& s);

struct ContractionScheme {
  SlotSignature signature;
  Matching matching;
  Matching key;  // least matching in the orbit under slot_symmetries
};

Matching canonical_key(const SlotSignature& s, const Matching& m);

struct GeneratorBlock {
  SlotSignature signature;
  std::size_t matchings = 0;  // before deduplication
  std::vector<ContractionScheme> schemes;
};

// Per admissible D: every matching of its slots, one scheme per canonical
// key (first matching in enumeration order represents its class). Throws
// CapExceeded when a D needs more than kMaxMatchingSlots slots.
std::vector<GeneratorBlock> enumerate_generator_blocks(std::size_t pbar,
                                                       std::size_t k);
std::vector<ContractionScheme> enumerate_generators(std::size_t pbar,
                                                    std::size_t k);

// Normal tensor inputs for one evaluation: normals[j - 2] lies in N_j.
using NormalInputs = std::vector<Tensor>;

// Value of the total contraction on the inputs: a covariant tensor with one
// slot per free slot. Contracted slots are paired with the inverse of the
// flat metric of `signature`; free-free pairs contribute a metric factor.
Tensor evaluate_scheme(const ContractionScheme& scheme,
                       const NormalInputs& normals, const Signature& signature);

struct EvaluationBatch {
  std::size_t dim = 0;
  std::size_t pbar = 0;
  std::vector<NormalInputs> samples;
  // Row (sample t, output tuple i) = t * n^(2 pbar) + flat(i); one column
  // per scheme.
  Matrix matrix;
};

// Draws `samples` independent input tuples (orders 2..max_order) from seed
// and evaluates every scheme on each.
EvaluationBatch evaluate_generators(std::span<const ContractionScheme> schemes,
                                    std::size_t pbar, std::size_t n,
                                    std::size_t samples, std::uint64_t seed,
                                    const Signature& signature);

Matrix evaluation_matrix(std::size_t pbar, std::size_t k, std::size_t n,
                         std::size_t samples, std::uint64_t seed);

// Metric jet g = eta + 1/2 X_{abcd} x^c x^d whose second derivatives at the
// origin are the given N_2 element; its coordinates are normal to second
// order.
MetricJet jet_from_normal_tensor(const Tensor& x2, const Signature& signature);

}  // namespace curvident
