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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvident/exact_linalg.hpp"

namespace curvident {

// Perfect matching of {0..m-1}. Pairs are stored as (a, b) with a < b,
// sorted by a, so equal matchings compare equal.
class Matching {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  Matching() = default;
  // Throws InvalidArgument unless the pairs partition {0..2 pairs.size()-1}.
  explicit Matching(std::vector<Pair> pairs);

  std::size_t size() const { return 2 * pairs_.size(); }  // m
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t partner(std::size_t slot) const { return partner_.at(slot); }

  // Relabels slot s as image[s].
  Matching relabeled(std::span<const std::size_t> image) const;

  std::string to_string() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.pairs_ == b.pairs_;
  }
  friend auto operator<=>(const Matching& a, const Matching& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  std::vector<Pair> pairs_;
  std::vector<std::size_t> partner_;
};

inline constexpr std::size_t kMaxMatchingSlots = 12;

// All (m-1)!! matchings, lexicographic in their sorted pair lists. Throws
// InvalidArgument for odd m and CapExceeded above kMaxMatchingSlots.
std::vector<Matching> enumerate_matchings(std::size_t m);

// Number of cycles in the union of the two edge sets (a doubled edge is a
// cycle of length two).
std::size_t union_cycles(const Matching& a, const Matching& b);

// <w_a, w_b> = n^(union_cycles(a, b)) over all matchings of m slots.
Matrix gram_matrix(std::size_t m, std::size_t n);

// Dimension of the span of the total contractions on (R^n)^{(x) m}.
std::size_t dim_invariants(std::size_t m, std::size_t n);

struct ReductionReport {
  std::size_t m = 0;
  std::vector<std::size_t> dims;  // dims[i] at n = i + 1
  // n at which dims[n] < dims[n-1] (surjectivity violated)
  std::vector<std::size_t> decreases;
  // n > m - 1 with dims[n] != dims[n-1] (isomorphism violated)
  std::vector<std::size_t> unstable;
  // Smallest n from which the dimension is constant up to n_max.
  std::size_t stable_from = 1;

  bool ok() const { return decreases.empty() && unstable.empty(); }
};

ReductionReport reduction_check(std::size_t m, std::size_t n_max);

}  // namespace curvident
