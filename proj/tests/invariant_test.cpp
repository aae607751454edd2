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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "curvident/curvature.hpp"
#include "curvident/errors.hpp"
#include "curvident/generators.hpp"
#include "curvident/kernel.hpp"
#include "curvident/matchings.hpp"
#include "curvident/normal_tensors.hpp"
#include "support.hpp"

using namespace curvident;
using namespace curvident::testing;

namespace {

std::size_t double_factorial(std::size_t m) {
  std::size_t out = 1;
  for (std::size_t i = m; i > 1; i -= 2) out *= i;
  return out;
}

// The multilinear form of a matching as a dense n^m array of 0/1.
std::vector<int> dense_form(const Matching& w, std::size_t n) {
  const std::size_t m = w.size();
  std::vector<int> out;
  std::vector<std::size_t> index(m, 0);
  do {
    int v = 1;
    for (const auto& [a, b] : w.pairs())
      if (index[a] != index[b]) v = 0;
    out.push_back(v);
  } while (next_multi_index(index, n));
  return out;
}

Tensor from_flat(std::size_t n, std::size_t rank, const Vector& v) {
  auto t = Tensor::covariant(n, rank);
  for (std::size_t i = 0; i < v.size(); ++i) t.flat(i) = v[i];
  return t;
}

// N_r by brute force: the nullspace of every defining linear condition
// written on the full n^(r+2) component array.
std::size_t dense_normal_dimension(std::size_t n, std::size_t r) {
  const std::size_t slots = r + 2;
  const std::size_t size = int_pow(n, slots);
  Matrix conditions;
  const auto add_swap = [&](std::size_t s, std::size_t t) {
    const auto p = Permutation::transposition(slots, s, t);
    for (std::size_t i = 0; i < size; ++i) {
      Vector basis(size, Rational(0));
      basis[i] = 1;
      const auto moved = permute_slots(from_flat(n, slots, basis), p);
      Vector row(size, Rational(0));
      row[i] += 1;
      for (std::size_t j = 0; j < size; ++j) row[j] -= moved.flat(j);
      conditions.append_row(row);
    }
  };
  add_swap(0, 1);
  for (std::size_t s = 2; s + 1 < slots; ++s) add_swap(s, s + 1);
  std::vector<std::size_t> tail;
  for (std::size_t s = 1; s < slots; ++s) tail.push_back(s);
  // the symmetrization map, column by column
  Matrix s_map(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    Vector basis(size, Rational(0));
    basis[i] = 1;
    const auto sym =
        symmetrize(from_flat(n, slots, basis), std::span<const std::size_t>(tail));
    for (std::size_t j = 0; j < size; ++j) s_map(j, i) = sym.flat(j);
  }
  conditions.append_rows(s_map);
  return size - rank(conditions);
}

}  // namespace

TEST(Matching, ConstructionAndErrors) {
  const Matching w({{2, 3}, {1, 0}});
  EXPECT_EQ(w.to_string(), "(0 1)(2 3)");
  EXPECT_EQ(w.partner(0), 1u);
  EXPECT_EQ(w.partner(3), 2u);
  EXPECT_THROW(Matching({{0, 1}, {1, 2}}), InvalidArgument);
  EXPECT_THROW(Matching({{0, 3}}), InvalidArgument);
  EXPECT_THROW(Matching({{0, 0}}), InvalidArgument);
}

TEST(Matching, EnumerationCountsAndOrder) {
  for (std::size_t m = 0; m <= 10; m += 2) {
    const auto all = enumerate_matchings(m);
    EXPECT_EQ(all.size(), double_factorial(m - (m > 0 ? 1 : 0))) << m;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<Matching>(all.begin(), all.end()).size(), all.size());
  }
  EXPECT_EQ(enumerate_matchings(4)[0].to_string(), "(0 1)(2 3)");
  EXPECT_THROW(enumerate_matchings(3), InvalidArgument);
  EXPECT_THROW(enumerate_matchings(14), CapExceeded);
}

TEST(Matching, RelabelAndCycles) {
  const Matching a({{0, 1}, {2, 3}});
  const Matching b({{0, 2}, {1, 3}});
  const std::vector<std::size_t> image{1, 2, 3, 0};
  EXPECT_EQ(a.relabeled(image).to_string(), "(0 3)(1 2)");
  EXPECT_EQ(union_cycles(a, a), 2u);
  EXPECT_EQ(union_cycles(a, b), 1u);
  EXPECT_EQ(union_cycles(b, a), 1u);
}

TEST(Gram, MatchesBruteForcePairing) {
  for (std::size_t m = 2; m <= 6; m += 2)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto all = enumerate_matchings(m);
      const auto gram = gram_matrix(m, n);
      std::vector<std::vector<int>> forms;
      for (const auto& w : all) forms.push_back(dense_form(w, n));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          long dot = 0;
          for (std::size_t t = 0; t < forms[i].size(); ++t)
            dot += forms[i][t] * forms[j][t];
          ASSERT_EQ(gram(i, j), Rational(dot)) << m << " " << n;
        }
      EXPECT_TRUE(gram.is_symmetric());
    }
}

TEST(Gram, DimensionIsDoubleFactorialWhenRoomy) {
  for (std::size_t m = 2; m <= 8; m += 2)
    for (std::size_t n = m / 2; n <= m / 2 + 2; ++n)
      if (m <= 2 * n) EXPECT_EQ(dim_invariants(m, n), double_factorial(m - 1));
}

TEST(Gram, SmallDimensionsAgreeWithDenseRank) {
  for (std::size_t m = 2; m <= 6; m += 2)
    for (std::size_t n = 1; n <= 3; ++n) {
      Matrix forms;
      for (const auto& w : enumerate_matchings(m)) {
        const auto dense = dense_form(w, n);
        forms.append_row(Vector(dense.begin(), dense.end()));
      }
      EXPECT_EQ(dim_invariants(m, n), rank(forms)) << m << " " << n;
    }
  EXPECT_EQ(dim_invariants(4, 1), 1u);
  EXPECT_EQ(dim_invariants(4, 2), 3u);
  EXPECT_EQ(dim_invariants(6, 2), 10u);
  EXPECT_EQ(dim_invariants(0, 3), 1u);
}

TEST(Reduction, StableFromMMinusOne) {
  for (std::size_t m = 2; m <= 8; m += 2) {
    const auto r = reduction_check(m, 8);
    EXPECT_TRUE(r.ok()) << m;
    EXPECT_LE(r.stable_from, m == 0 ? 1 : m - 1) << m;
    ASSERT_EQ(r.dims.size(), 8u);
    for (std::size_t i = 1; i < r.dims.size(); ++i)
      EXPECT_LE(r.dims[i - 1], r.dims[i]);
  }
  EXPECT_THROW(reduction_check(3, 4), InvalidArgument);
}

TEST(NormalTensors, RiemannTypeDimensions) {
  const std::size_t expected[] = {0, 1, 6, 20};
  for (std::size_t n = 1; n <= 4; ++n) {
    const NormalTensorSpace space(n, 2);
    EXPECT_EQ(space.dimension(), n * n * (n * n - 1) / 12);
    EXPECT_EQ(space.dimension(), expected[n - 1]);
  }
}

TEST(NormalTensors, RankNullityOfExactSequence) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 2; r <= 4; ++r) {
      const NormalTensorSpace space(n, r);
      const std::size_t target = n * symmetric_power_dimension(n, r + 1);
      EXPECT_EQ(space.symmetrization_rank(), target) << n << " " << r;
      EXPECT_EQ(space.dimension() + space.symmetrization_rank(),
                space.ambient_dimension());
    }
}

TEST(NormalTensors, AgreesWithDenseNullspace) {
  for (const auto [n, r] : {std::pair<std::size_t, std::size_t>{2, 2},
                            {3, 2},
                            {2, 3},
                            {2, 4}})
    EXPECT_EQ(NormalTensorSpace(n, r).dimension(),
              dense_normal_dimension(n, r))
        << n << " " << r;
}

TEST(NormalTensors, BasisAndSamplesAreNormal) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t r = 2; r <= 3; ++r) {
      const auto basis = normal_tensor_basis(n, r);
      Matrix rows;
      for (const auto& t : basis) {
        EXPECT_TRUE(is_normal_tensor(t, r));
        rows.append_row(t.data());
      }
      EXPECT_EQ(rank(rows), basis.size());
      for (std::uint64_t seed = 0; seed < 5; ++seed)
        EXPECT_TRUE(is_normal_tensor(random_normal_tensor(n, r, seed).tensor, r));
    }
  EXPECT_FALSE(is_normal_tensor(random_covariant(2, 4, 3), 2));
  EXPECT_THROW(NormalTensorSpace(2, 1), InvalidArgument);
  EXPECT_THROW(NormalTensorSpace(0, 2), InvalidArgument);
}

TEST(NormalTensors, SecondOrderJetIsNormal) {
  const auto sig = Signature::riemannian(3);
  const auto x = random_normal_tensor(3, 2, 11).tensor;
  const auto g = jet_from_normal_tensor(x, sig);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_EQ(first_derivative(g, a, b, c), 0);
        for (std::size_t d = 0; d < 3; ++d)
          EXPECT_EQ(second_derivative(g, a, b, c, d), x.at({a, b, c, d}));
      }
  EXPECT_THROW(jet_from_normal_tensor(random_covariant(3, 3, 1), sig),
               InvalidArgument);
}

TEST(Generators, AdmissibleSignatures) {
  const auto d02 = admissible_signatures(0, 2);
  ASSERT_EQ(d02.size(), 2u);
  EXPECT_EQ(d02[0].to_string(), "(2,0,0)");
  EXPECT_EQ(d02[1].to_string(), "(0,0,1)");
  const auto d20 = admissible_signatures(2, 0);
  ASSERT_EQ(d20.size(), 1u);
  EXPECT_EQ(d20[0].slot_count(), 4u);
  // partitions of 6 into parts >= 2: 6, 4+2, 3+3, 2+2+2
  EXPECT_EQ(admissible_signatures(0, 3).size(), 4u);
  for (const auto& s : admissible_signatures(1, 3))
    EXPECT_EQ(s.weight_sum(), 6u);
  EXPECT_THROW(admissible_signatures(0, 0), ExceptionalCase);
  EXPECT_THROW(admissible_signatures(1, 0), ExceptionalCase);
}

TEST(Generators, SymmetryGroupOrder) {
  // (2 j!)^{d_j} d_j! per order
  const SlotSignature s{1, {2, 0, 0}};
  const auto group = slot_symmetries(s);
  EXPECT_EQ(group.size(), 4u * 4u * 2u);
  std::set<std::vector<std::size_t>> unique(group.begin(), group.end());
  EXPECT_EQ(unique.size(), group.size());
  for (const auto& image : group) {
    EXPECT_EQ(image[8], 8u);
    EXPECT_EQ(image[9], 9u);
  }
  EXPECT_EQ(slot_symmetries(SlotSignature{0, {0, 0, 1}}).size(), 2u * 24u);
}

TEST(Generators, CountsForSmallCases) {
  EXPECT_EQ(enumerate_generators(0, 1).size(), 2u);
  EXPECT_EQ(enumerate_generators(2, 0).size(), 3u);
  const auto blocks = enumerate_generator_blocks(1, 1);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].matchings, 15u);
  EXPECT_EQ(blocks[0].schemes.size(), 6u);
  EXPECT_THROW(enumerate_generators(1, 3), CapExceeded);
}

TEST(Generators, DeduplicationIsSoundAndComplete) {
  for (const auto [pbar, k] : {std::pair<std::size_t, std::size_t>{1, 1},
                               {0, 2},
                               {2, 1}}) {
    const std::size_t n = 3;
    const auto sig = Signature::riemannian(n);
    RationalSource source(pbar * 10 + k);
    NormalInputs inputs;
    for (std::size_t r = 2; r <= std::max<std::size_t>(2, 2 * k); ++r)
      inputs.push_back(NormalTensorSpace(n, r).sample(source).tensor);
    for (const auto& block : enumerate_generator_blocks(pbar, k)) {
      std::map<Matching, Tensor> by_key;
      for (const auto& scheme : block.schemes)
        by_key.emplace(scheme.key, evaluate_scheme(scheme, inputs, sig));
      for (const auto& m : enumerate_matchings(block.signature.slot_count())) {
        const auto key = canonical_key(block.signature, m);
        const auto it = by_key.find(key);
        ASSERT_NE(it, by_key.end()) << m.to_string();
        EXPECT_EQ(evaluate_scheme({block.signature, m, key}, inputs, sig),
                  it->second)
            << m.to_string();
      }
    }
  }
}

TEST(Generators, ScalarContractionsOfRiemannTypeTensor) {
  // X_aabb and X_abab; the second is -1/2 the first on N_2
  const auto schemes = enumerate_generators(0, 1);
  const auto sig = Signature::riemannian(3);
  const auto x = random_normal_tensor(3, 2, 5).tensor;
  Rational aabb = 0, abab = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      aabb += x.at({a, a, b, b});
      abab += x.at({a, b, a, b});
    }
  std::multiset<Rational> expected{aabb, abab}, got;
  for (const auto& s : schemes) got.insert(evaluate_scheme(s, {x}, sig).flat(0));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(abab, -aabb / 2);
}

TEST(Generators, EvaluationMatrixShapeAndRank) {
  const auto e = evaluation_matrix(1, 1, 3, 4, 7);
  EXPECT_EQ(e.rows(), 4u * 9u);
  EXPECT_EQ(e.cols(), 6u);
  EXPECT_EQ(rank(evaluation_matrix(0, 1, 3, 3, 1)), 1u);
  EXPECT_EQ(rank(evaluation_matrix(0, 1, 1, 3, 1)), 0u);
  EXPECT_EQ(evaluation_matrix(1, 1, 3, 4, 7), e);
}

TEST(Kernel, PredictedFormula) {
  EXPECT_EQ(predicted_kernel_dimension(0), 1u);
  EXPECT_EQ(predicted_kernel_dimension(1), 1u);
  EXPECT_EQ(predicted_kernel_dimension(2), 6u);
  EXPECT_EQ(predicted_kernel_dimension(3), 60u);
}

TEST(Kernel, SmallCases) {
  EXPECT_EQ(kernel_dimension(0, 1, 1), 1u);
  EXPECT_EQ(kernel_dimension(0, 1, 2), 0u);
  EXPECT_EQ(kernel_dimension(1, 1, 2), 1u);
  EXPECT_EQ(kernel_dimension(1, 1, 3), 0u);
  const auto r = kernel_dimension_report(1, 1, 2, 4);
  EXPECT_TRUE(r.at_dim.stable());
  EXPECT_EQ(r.reference_dim, 4u);
  EXPECT_EQ(r.at_reference.rank_union, 2u);
  EXPECT_THROW(kernel_dimension(1, 1, 4), InvalidArgument);
  EXPECT_THROW(kernel_dimension(1, 1, 0), InvalidArgument);
}

TEST(Kernel, FourFreeSlotsLinearInCurvature) {
  // S_{4,1} obeys the first Bianchi identity, so its permuted copies span
  // two dimensions, which is the full kernel in dimension 3.
  EXPECT_EQ(kernel_dimension(2, 1, 3), 2u);
  EXPECT_EQ(kernel_dimension(2, 1, 4), 0u);
}

TEST(Membership, SmallCases) {
  for (const auto [pbar, k] : {std::pair<std::size_t, std::size_t>{0, 1},
                               {1, 1},
                               {2, 0}}) {
    const auto m = membership_check(pbar, k, 3);
    EXPECT_TRUE(m.in_column_space);
    EXPECT_TRUE(m.in_kernel);
    EXPECT_TRUE(m.vanishes_below);
    EXPECT_TRUE(m.nonzero_at_critical);
    EXPECT_TRUE(m.verdict()) << pbar << " " << k;
  }
  const auto m = membership_check(2, 0);
  EXPECT_EQ(m.distinct_tensors, 6u);
  EXPECT_EQ(m.span_dimension, 2u);
  EXPECT_FALSE(m.matches_formula());
  const auto j = to_json(m);
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["predicted_dimension"], 6);
}
