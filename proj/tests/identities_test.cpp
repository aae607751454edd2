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

#include <set>

#include "curvident/curvature.hpp"
#include "curvident/errors.hpp"
#include "curvident/identities.hpp"
#include "support.hpp"

namespace curvident {
namespace {

// S built the slow way: product of mixed curvature factors with a dense
// generalized Kronecker delta, traced pair by pair, then lowered.
Tensor dense_s(std::size_t pbar, std::size_t k, const Tensor& r,
               const Tensor& g0) {
  const std::size_t n = g0.dim();
  const Tensor mixed = raise_slot(raise_slot(r, 2, g0), 3, g0);
  const int m = static_cast<int>(2 * k + pbar);
  // labels: c_t = t, b_t = 100 + t, j_s = 200 + s, i_s = 300 + s
  Tensor t = Tensor::scalar(n, 1);
  std::vector<int> labels;
  for (int f = 0; f < static_cast<int>(k); ++f) {
    t = tensor_product(t, mixed);
    labels.insert(labels.end(), {2 * f, 2 * f + 1, 100 + 2 * f, 101 + 2 * f});
  }
  t = tensor_product(t, generalized_kronecker(static_cast<std::size_t>(m), n));
  for (int a = 0; a < m; ++a) labels.push_back(a < 2 * int(k) ? a : 200 + a - 2 * int(k));
  for (int a = 0; a < m; ++a) labels.push_back(a < 2 * int(k) ? 100 + a : 300 + a - 2 * int(k));
  for (bool again = true; again;) {
    again = false;
    for (std::size_t a = 0; a < labels.size() && !again; ++a)
      for (std::size_t b = a + 1; b < labels.size() && !again; ++b)
        if (labels[a] == labels[b]) {
          t = contract(t, a, b);
          labels.erase(labels.begin() + b);
          labels.erase(labels.begin() + a);
          again = true;
        }
  }
  // remaining: j_1..j_pbar (upper), i_1..i_pbar; lower j, then order (i, j)
  for (std::size_t s = 0; s < pbar; ++s) t = lower_slot(t, s, g0);
  if (pbar == 0) return t;
  std::vector<std::size_t> image(2 * pbar);
  for (std::size_t s = 0; s < pbar; ++s) {
    image[s] = pbar + s;
    image[pbar + s] = s;
  }
  return permute_slots(t, Permutation(image));
}

Tensor gauss_bonnet(const MetricJet& g) {
  const Tensor g0 = g.at_base();
  const Tensor r = riemann(g);
  const Tensor ric = ricci(g);
  const Rational sc = scalar_curvature(g);
  Rational ric2 = contract(contract(tensor_product(ric, ric), 0, 2, g0), 0, 1, g0).flat(0);
  Tensor rr = tensor_product(r, r);
  for (std::size_t s = 0; s < 4; ++s) rr = contract(rr, 0, 4 - s, g0);
  return Tensor::scalar(g.dim(), sc * sc - 4 * ric2 + rr.flat(0));
}

TEST(STensor, MatchesDenseDeltaRoute) {
  for (const Signature sig : {Signature{2, 0}, Signature{1, 1}, Signature{3, 0},
                              Signature{2, 1}})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto g = random_metric_jet(sig.dim(), sig, 2, seed);
      // non-diagonal base metric exercises the raising and lowering
      std::vector<std::vector<Rational>> p(sig.dim(),
                                           std::vector<Rational>(sig.dim(), 0));
      for (std::size_t i = 0; i < sig.dim(); ++i) {
        p[i][i] = 1;
        if (i + 1 < sig.dim()) p[i][i + 1] = Rational(1, 2);
      }
      g = change_coordinates(g, p);
      const Tensor r = riemann(g);
      for (const auto [pbar, k] : {std::pair<std::size_t, std::size_t>{0, 1},
                                   {1, 1}, {1, 0}}) {
        EXPECT_EQ(s_tensor(pbar, k, g), dense_s(pbar, k, r, g.at_base()))
            << pbar << "," << k << " " << sig.to_string();
      }
    }
}

TEST(STensor, OneZeroIsTheMetric) {
  for (const Signature sig : {Signature{3, 0}, Signature{2, 2}}) {
    const auto g = random_metric_jet(sig.dim(), sig, 2, 4);
    EXPECT_EQ(s_tensor(1, 0, g), g.at_base());
  }
}

TEST(STensor, ScalarCurvatureConstant) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto first = random_metric_jet(n, Signature::riemannian(n), 2, 0);
    const auto c = proportionality(s_tensor(0, 1, first),
                                   Tensor::scalar(n, scalar_curvature(first)));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, 2);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto g = random_metric_jet(n, Signature::lorentzian(n), 2, seed);
      EXPECT_EQ(s_tensor(0, 1, g).flat(0), *c * scalar_curvature(g));
    }
  }
}

TEST(STensor, EinsteinConstant) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = random_metric_jet(n, Signature::riemannian(n), 2, seed);
      EXPECT_EQ(s_tensor(1, 1, g), Rational(-4) * einstein(g));
    }
}

TEST(STensor, GaussBonnetConstant) {
  for (const Signature sig : {Signature{4, 0}, Signature{3, 1}, Signature{5, 0}})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto g = random_metric_jet(sig.dim(), sig, 2, seed);
      EXPECT_EQ(s_tensor(0, 2, g), Rational(4) * gauss_bonnet(g));
    }
}

TEST(STensor, BlockSymmetries) {
  for (const auto [pbar, k, n] :
       {std::tuple<std::size_t, std::size_t, std::size_t>{2, 1, 4}, {2, 1, 5},
        {1, 2, 5}, {3, 1, 5}}) {
    const auto g = random_metric_jet(n, Signature::lorentzian(n), 2, 9);
    const Tensor s = s_tensor(pbar, k, g);
    ASSERT_FALSE(s.is_zero());
    std::vector<std::size_t> swap(2 * pbar);
    for (std::size_t i = 0; i < pbar; ++i) {
      swap[i] = pbar + i;
      swap[pbar + i] = i;
    }
    EXPECT_EQ(permuted_s(Permutation(swap), pbar, k, g), s);
    EXPECT_EQ(permuted_s(Permutation::identity(2 * pbar), pbar, k, g), s);
    if (pbar >= 2) {
      EXPECT_EQ(permuted_s(Permutation::transposition(2 * pbar, 0, 1), pbar, k, g), -s);
      EXPECT_EQ(permuted_s(Permutation::transposition(2 * pbar, pbar, pbar + 1),
                           pbar, k, g),
                -s);
    }
  }
  EXPECT_THROW(permuted_s(Permutation::identity(3), 1, 1,
                          random_metric_jet(3, {3, 0}, 2, 0)),
               InvalidArgument);
}

TEST(STensor, FirstBianchiForFourSlots) {
  // S_{4,1} inherits the cyclic identity: S_{a[bcd]} = 0
  const auto g = random_metric_jet(5, Signature::riemannian(5), 2, 3);
  const Tensor s = s_tensor(2, 1, g);
  const Tensor cyclic = s + permute_slots(s, Permutation{0, 2, 3, 1}) +
                        permute_slots(s, Permutation{0, 3, 1, 2});
  EXPECT_TRUE(cyclic.is_zero());
}

TEST(STensor, DistinctPermutedCopies) {
  // The block symmetries leave 6 distinct tensors sigma . S_{4,1}, falling
  // into 3 pairs {T, -T}.
  const auto g = random_metric_jet(4, Signature::riemannian(4), 2, 1);
  const Tensor s = s_tensor(2, 1, g);
  std::set<std::vector<Rational>> exact, up_to_sign;
  const auto key = [](const Tensor& t) {
    return std::vector<Rational>(t.data().begin(), t.data().end());
  };
  for (const auto& sigma : all_permutations(4)) {
    const Tensor t = permute_slots(s, sigma);
    exact.insert(key(t));
    const Tensor neg = -t;
    up_to_sign.insert(std::min(key(t), key(neg)));
  }
  EXPECT_EQ(exact.size(), 6u);
  EXPECT_EQ(up_to_sign.size(), 3u);
}

TEST(STensor, Equivariance) {
  for (const Signature sig : {Signature{4, 0}, Signature{2, 2}})
    for (const auto [pbar, k] :
         {std::pair<std::size_t, std::size_t>{2, 1}, {0, 2}, {1, 1}}) {
      const auto g = random_metric_jet(sig.dim(), sig, 2, 5);
      const auto p = testing::signed_permutation(sig, 12);
      EXPECT_EQ(s_tensor(pbar, k, change_coordinates(g, p)),
                pull_back(s_tensor(pbar, k, g), p));
    }
}

TEST(Pfaffian, DimensionTwoTracksScalarCurvature) {
  for (const Signature sig : {Signature{2, 0}, Signature{1, 1}}) {
    const auto first = random_metric_jet(2, sig, 2, 0);
    const Rational c = scalar_curvature(first) / pfaffian_density(first);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto g = random_metric_jet(2, sig, 2, seed);
      EXPECT_EQ(scalar_curvature(g), c * pfaffian_density(g));
    }
  }
}

TEST(Pfaffian, DimensionFourTracksGaussBonnet) {
  const auto first = random_metric_jet(4, {4, 0}, 2, 0);
  const Rational pf = pfaffian_density(first);
  ASSERT_FALSE(is_zero(pf));
  const Rational c = s_tensor(0, 2, first).flat(0) / pf;
  EXPECT_EQ(c, 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_metric_jet(4, {4, 0}, 2, seed);
    EXPECT_EQ(s_tensor(0, 2, g).flat(0), c * pfaffian_density(g));
  }
}

TEST(Pfaffian, FlatAndOdd) {
  EXPECT_TRUE(is_zero(pfaffian_density(MetricJet({4, 0}, 2))));
  EXPECT_THROW(pfaffian_density(MetricJet({3, 0}, 2)), InvalidArgument);
}

TEST(IdentityJob, Validation) {
  IdentityJob job{0, 0, 2, {2, 0}, 1, 0};
  EXPECT_THROW(job.validate(), ExceptionalCase);
  job.pbar = 1;
  EXPECT_THROW(job.validate(), ExceptionalCase);
  job.k = 1;
  EXPECT_NO_THROW(job.validate());
  EXPECT_EQ(job.weight(), 0);
  job.trials = 0;
  EXPECT_THROW(job.validate(), InvalidArgument);
  job.trials = 1;
  job.signature = {3, 0};
  EXPECT_THROW(job.validate(), InvalidArgument);
  job.dim = 7;
  job.signature = {7, 0};
  EXPECT_THROW(job.validate(), CapExceeded);
}

TEST(VerifyVanishing, EinsteinInDimensionTwo) {
  const auto report = verify_vanishing({1, 1, 2, {2, 0}, 20, 0});
  EXPECT_TRUE(report.identity_holds());
  EXPECT_TRUE(report.matches_prediction());
  EXPECT_EQ(report.max_abs_numerator, 0);
}

TEST(VerifyVanishing, GaussBonnetBelowAndAtCriticalDimension) {
  const auto below = verify_vanishing({0, 2, 3, {3, 0}, 20, 0});
  EXPECT_TRUE(below.identity_holds());
  EXPECT_TRUE(below.matches_prediction());
  const auto at = verify_vanishing({0, 2, 4, {4, 0}, 20, 0});
  EXPECT_FALSE(at.identity_holds());
  EXPECT_TRUE(at.matches_prediction());
  ASSERT_TRUE(at.constants.count("s_over_pfaffian"));
  EXPECT_EQ(at.constants.at("s_over_pfaffian").value, 1);
  EXPECT_TRUE(at.constants.at("s_over_pfaffian").consistent);
  const auto& w = at.results.front();
  EXPECT_FALSE(w.exact_zero);
  EXPECT_EQ(w.witness_index.size(), 0u);
}

TEST(VerifyVanishing, ConstantsAndJson) {
  const auto report = verify_vanishing({1, 1, 3, {2, 1}, 4, 10});
  EXPECT_EQ(report.constants.at("s_over_einstein").value, -4);
  EXPECT_TRUE(report.constants.at("s_over_einstein").consistent);
  const auto doc = to_json(report);
  EXPECT_EQ(doc["schema"], "curvident/1");
  EXPECT_EQ(doc["job"]["signature"], "2,1");
  EXPECT_EQ(doc["results"].size(), 4u);
  EXPECT_EQ(doc["results"][2]["seed"], 12);
  EXPECT_TRUE(doc["results"][0].contains("witness_component"));
  EXPECT_EQ(doc["verdict"], "identity fails");
  EXPECT_EQ(doc["matches_prediction"], true);
  EXPECT_EQ(to_json(verify_vanishing({1, 1, 3, {2, 1}, 4, 10})).dump(), doc.dump());
}

TEST(Homogeneity, Examples) {
  const auto g3 = random_metric_jet(3, {3, 0}, 2, 2);
  EXPECT_TRUE(homogeneity_check(1, 1, g3, 4));
  EXPECT_TRUE(homogeneity_check(0, 1, g3, 4));
  EXPECT_EQ(s_tensor(0, 1, rescale(g3, 4)), Rational(1, 4) * s_tensor(0, 1, g3));
  const auto g4 = random_metric_jet(4, {3, 1}, 2, 2);
  EXPECT_TRUE(homogeneity_check(2, 1, g4, 9));
  EXPECT_EQ(s_tensor(2, 1, rescale(g4, 9)), Rational(9) * s_tensor(2, 1, g4));
  EXPECT_FALSE(s_tensor(2, 1, g4).is_zero());
}

TEST(Universality, Examples) {
  EXPECT_TRUE(universality_check(0, 1, MetricJet({2, 0}, 2)));
  EXPECT_TRUE(s_tensor(1, 1, cylinder_extend(MetricJet({2, 0}, 2))).is_zero());
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto g = random_metric_jet(3, {3, 0}, 2, seed);
    EXPECT_TRUE(universality_check(1, 1, g));
    EXPECT_TRUE(universality_check(2, 1, g));
    EXPECT_TRUE(universality_check(0, 2, g));
  }
}

TEST(Universality, TwoStepExtension) {
  const auto g = random_metric_jet(2, {1, 1}, 2, 8);
  const auto twice = cylinder_extend(cylinder_extend(g));
  EXPECT_EQ(restrict_to_base(restrict_to_base(s_tensor(1, 1, twice))),
            s_tensor(1, 1, g));
}

TEST(Universality, ContractionWithCurvatureStaysUniversal) {
  // T_ab = R_a^c_b^d S_cd is built from curvature and a universal tensor.
  const auto t = [](const MetricJet& g) {
    const Tensor g0 = g.at_base();
    Tensor x = tensor_product(riemann(g), s_tensor(1, 1, g));
    x = contract(x, 1, 4, g0);
    return contract(x, 2, 3, g0);
  };
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto g = random_metric_jet(3, {2, 1}, 2, seed);
    EXPECT_EQ(restrict_to_base(t(cylinder_extend(g))), t(g));
  }
}

}  // namespace
}  // namespace curvident
