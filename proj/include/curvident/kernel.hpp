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
#include <vector>

#include "json.hpp"

#include "curvident/generators.hpp"

namespace curvident {

// Rank of the evaluation matrix at one dimension, certified by drawing two
// independent batches of `samples_per_batch` input tuples: both batches and
// their union must have the same rank.
struct RankCertificate {
  std::size_t dim = 0;
  std::size_t columns = 0;
  std::size_t samples_per_batch = 0;
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
  std::size_t rank_union = 0;

  bool stable() const {
    return rank_first == rank_union && rank_second == rank_union;
  }
};

// Throws RankNotStabilized when the certificate is not stable.
RankCertificate certified_rank(std::span<const ContractionScheme> schemes,
                               std::size_t pbar, std::size_t n,
                               std::uint64_t seed);

// Largest dimension in which ranks are computed.
inline constexpr std::size_t kMaxKernelDim = 6;

struct KernelDimension {
  std::size_t pbar = 0;
  std::size_t k = 0;
  std::size_t dim = 0;
  // 2k + pbar + 1
  std::size_t reference_dim = 0;
  RankCertificate at_dim;
  RankCertificate at_reference;
  std::size_t dimension = 0;  // rank at reference - rank at dim
};

// Dimension of the space of universal tensors built from the generators of
// (pbar, k) that vanish in dimension n. Requires 1 <= n <= 2k + pbar; throws
// CapExceeded when 2k + pbar + 1 > kMaxKernelDim.
KernelDimension kernel_dimension_report(std::size_t pbar, std::size_t k,
                                        std::size_t n, std::uint64_t seed = 0);
std::size_t kernel_dimension(std::size_t pbar, std::size_t k, std::size_t n);

// pbar (pbar + 1) ... (2 pbar - 1), and 1 for pbar in {0, 1}.
std::size_t predicted_kernel_dimension(std::size_t pbar);

struct MembershipReport {
  std::size_t pbar = 0;
  std::size_t k = 0;
  std::size_t critical_dim = 0;  // 2k + pbar
  std::size_t distinct_tensors = 0;
  // Every sigma . S is a combination c_sigma of the generator columns at
  // the critical dimension.
  bool in_column_space = false;
  // Every c_sigma is annihilated by the evaluation matrix one dimension
  // below.
  bool in_kernel = false;
  // S evaluated directly below the critical dimension is zero, and is not
  // zero at it.
  bool vanishes_below = false;
  bool nonzero_at_critical = false;
  std::size_t span_dimension = 0;
  std::size_t kernel_dimension = 0;  // computed at 2k + pbar - 1
  std::size_t predicted_dimension = 0;

  // The sigma . S lie in the kernel and span all of it.
  bool verdict() const {
    return in_column_space && in_kernel && vanishes_below &&
           nonzero_at_critical && span_dimension == kernel_dimension;
  }
  bool matches_formula() const {
    return span_dimension == predicted_dimension;
  }
};

MembershipReport membership_check(std::size_t pbar, std::size_t k,
                                  std::uint64_t seed = 0);

nlohmann::json to_json(const RankCertificate& c);
nlohmann::json to_json(const KernelDimension& k);
nlohmann::json to_json(const MembershipReport& m);

}  // namespace curvident
