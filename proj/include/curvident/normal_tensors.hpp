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
#include <vector>

#include "curvident/exact_linalg.hpp"
#include "curvident/rational.hpp"
#include "curvident/tensor.hpp"

namespace curvident {

// An element of N_r: components X_{ab c_1..c_r}, symmetric in (a, b),
// symmetric in the c's, and killed by symmetrization over (b, c_1..c_r).
struct NormalTensorSample {
  std::size_t order = 0;  // r
  std::size_t dim = 0;    // n
  Tensor tensor;
};

// N_r inside S^2 (x) S^r, as the kernel of the symmetrization
//   s_{r+1}: S^2 (x) S^r -> T* (x) S^{r+1}
// on the monomial basis (pair {a <= b}, multiset of r indices), one block
// per multiset of all r + 2 indices.
class NormalTensorSpace {
 public:
  // Throws InvalidArgument for r < 2 or n < 1.
  NormalTensorSpace(std::size_t n, std::size_t r);

  std::size_t dim() const { return n_; }
  std::size_t order() const { return r_; }
  std::size_t dimension() const { return dimension_; }
  // Rank of s_{r+1}, summed over blocks.
  std::size_t symmetrization_rank() const { return rank_; }
  // dim S^2 (x) S^r
  std::size_t ambient_dimension() const { return ambient_; }

  // Integral basis vectors as dense tensors.
  std::vector<Tensor> basis() const;
  Tensor combination(std::span<const Rational> coefficients) const;
  // Integer coefficients drawn uniformly from [-bound, bound].
  NormalTensorSample sample(RationalSource& source, long bound = 9) const;

 private:
  struct Block {
    // (a, b, c_1..c_r) with a <= b and the c's sorted
    std::vector<std::vector<std::uint8_t>> columns;
    std::vector<Vector> kernel;
  };

  Tensor expand(const std::vector<Vector>& block_values) const;

  std::size_t n_;
  std::size_t r_;
  std::size_t dimension_ = 0;
  std::size_t rank_ = 0;
  std::size_t ambient_ = 0;
  std::vector<Block> blocks_;
};

std::vector<Tensor> normal_tensor_basis(std::size_t n, std::size_t r);

NormalTensorSample random_normal_tensor(std::size_t n, std::size_t r,
                                        std::uint64_t seed);

// Checks the block symmetries and the annihilation by s_{r+1} directly on
// the components.
bool is_normal_tensor(const Tensor& t, std::size_t r);

// C(n + k - 1, k)
std::size_t symmetric_power_dimension(std::size_t n, std::size_t k);

}  // namespace curvident
