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

// Acceptance suite: one PASS/FAIL line per criterion. Run everything, or a
// single criterion with --only N.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "curvident/curvature.hpp"
#include "curvident/identities.hpp"
#include "curvident/kernel.hpp"
#include "curvident/matchings.hpp"
#include "curvident/normal_tensors.hpp"

using namespace curvident;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::string tolerance;
  double limit_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

using Pair = std::pair<std::size_t, std::size_t>;
const std::vector<Pair> kVanishingGrid{{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}};

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::size_t double_factorial(std::size_t m) {
  std::size_t out = 1;
  for (std::size_t i = m; i > 1; i -= 2) out *= i;
  return out;
}

void fail(Outcome& o, const std::string& what) {
  o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

Outcome einstein_identity() {
  Outcome o;
  std::size_t jets = 0;
  for (const auto& sig : {Signature{2, 0}, Signature{1, 1}})
    for (std::uint64_t t = 0; t < 20; ++t, ++jets) {
      const auto g = random_metric_jet(2, sig, 2, 1000 + t);
      if (!einstein(g).is_zero())
        fail(o, "nonzero Einstein tensor, signature " + sig.to_string() +
                    " seed " + std::to_string(1000 + t));
    }
  if (o.pass) o.detail = std::to_string(jets) + " jets, all components zero";
  return o;
}

Outcome vanishing_dichotomy() {
  Outcome o;
  std::size_t runs = 0;
  for (const auto& [pbar, k] : kVanishingGrid) {
    const std::size_t critical = 2 * k + pbar;
    for (const std::size_t dim : {critical - 1, critical})
      for (const auto& sig :
           {Signature::riemannian(dim), Signature::lorentzian(dim)}) {
        IdentityJob job;
        job.pbar = pbar;
        job.k = k;
        job.dim = dim;
        job.signature = sig;
        job.trials = 20;
        job.seed = 2000;
        const auto report = verify_vanishing(job);
        ++runs;
        if (!report.matches_prediction())
          fail(o, pair_str(pbar, k) + " dim " + std::to_string(dim) + " " +
                      sig.to_string() +
                      (dim < critical ? " not zero" : " no witness"));
      }
  }
  if (o.pass)
    o.detail = std::to_string(runs) +
               " runs of 20 jets: zero below 2k+pbar, witness at 2k+pbar";
  return o;
}

Outcome kernel_dimensions() {
  Outcome o;
  const std::vector<std::pair<Pair, std::size_t>> expected{
      {{0, 1}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{2, 1}, 6}};
  std::string values;
  for (const auto& [pk, want] : expected) {
    const auto [pbar, k] = pk;
    const std::size_t critical = 2 * k + pbar;
    const auto below = kernel_dimension(pbar, k, critical - 1);
    const auto at = kernel_dimension(pbar, k, critical);
    values += (values.empty() ? "" : " ") + pair_str(pbar, k) + ":" +
              std::to_string(below) + "/" + std::to_string(at);
    if (below != want)
      fail(o, "kernel_dimension" + pair_str(pbar, k) + " at n=" +
                  std::to_string(critical - 1) + " is " +
                  std::to_string(below) + ", expected " + std::to_string(want));
    if (at != 0)
      fail(o, "kernel_dimension" + pair_str(pbar, k) + " at n=" +
                  std::to_string(critical) + " is " + std::to_string(at));
  }
  o.detail = "below/at critical " + values + (o.detail.empty() ? "" : "; ") +
             o.detail;
  return o;
}

Outcome invariant_dimensions() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t m = 2; m <= 8; m += 2)
    for (std::size_t n = m / 2; n <= 8; ++n, ++checked)
      if (dim_invariants(m, n) != double_factorial(m - 1))
        fail(o, "dim_invariants(" + std::to_string(m) + "," +
                    std::to_string(n) + ")");
  // brute-force pairing: sum over all index tuples of products of deltas
  for (std::size_t m = 2; m <= 6; m += 2)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto all = enumerate_matchings(m);
      const auto gram = gram_matrix(m, n);
      std::vector<std::vector<int>> forms;
      for (const auto& w : all) {
        std::vector<int> form;
        std::vector<std::size_t> index(m, 0);
        do {
          int v = 1;
          for (const auto& [a, b] : w.pairs()) v &= index[a] == index[b];
          form.push_back(v);
        } while (next_multi_index(index, n));
        forms.push_back(std::move(form));
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          long dot = 0;
          for (std::size_t t = 0; t < forms[i].size(); ++t)
            dot += forms[i][t] * forms[j][t];
          if (gram(i, j) != Rational(dot))
            fail(o, "gram(" + std::to_string(m) + "," + std::to_string(n) +
                        ") entry " + std::to_string(i) + "," +
                        std::to_string(j));
        }
    }
  if (o.pass)
    o.detail = std::to_string(checked) +
               " (m,n) pairs equal (m-1)!!; Gram matches brute force for m<=6, n<=3";
  return o;
}

Outcome reduction_stabilization() {
  Outcome o;
  std::string stable;
  for (std::size_t m = 2; m <= 8; m += 2) {
    const auto r = reduction_check(m, 8);
    for (std::size_t n = m - 1; n < 8; ++n)
      if (r.dims[n] != r.dims[n - 1])
        fail(o, "m=" + std::to_string(m) + " changes at n=" +
                    std::to_string(n + 1));
    stable += (stable.empty() ? "" : " ") + std::to_string(m) + ":" +
              std::to_string(r.stable_from);
  }
  o.detail = "constant for n >= m-1 up to n=8; stable from (m:n) " + stable +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome cylinder_universality() {
  Outcome o;
  std::size_t jets = 0;
  for (const auto& [pbar, k] : std::vector<Pair>{{0, 1}, {1, 1}})
    for (const std::size_t n : {2, 3})
      for (std::uint64_t t = 0; t < 10; ++t, ++jets) {
        const auto g =
            random_metric_jet(n, Signature::riemannian(n), 2, 6000 + t);
        const auto h = cylinder_extend(g);
        if (restrict_to_base(riemann(h)) != riemann(g))
          fail(o, "R(g + dt^2) restriction, dim " + std::to_string(n));
        if (!universality_check(pbar, k, g))
          fail(o, "S" + pair_str(pbar, k) + " restriction, dim " +
                      std::to_string(n) + " seed " + std::to_string(6000 + t));
      }
  if (o.pass)
    o.detail = std::to_string(jets) + " jets: R and S restrict exactly";
  return o;
}

Outcome homogeneity() {
  Outcome o;
  std::size_t checks = 0;
  for (const Rational& lambda2 : {Rational(4), Rational(9)})
    for (const auto& [pbar, k] : kVanishingGrid) {
      const std::size_t n = 2 * k + pbar;
      for (const auto& sig :
           {Signature::riemannian(n), Signature::lorentzian(n)}) {
        const auto g = random_metric_jet(n, sig, 2, 7000 + n);
        const auto h = rescale(g, lambda2);
        const std::string where = pair_str(pbar, k) + " " + sig.to_string() +
                                  " lambda^2=" + to_string(lambda2);
        if (h.at_base() != lambda2 * g.at_base()) fail(o, "g " + where);
        if (riemann(h) != lambda2 * riemann(g)) fail(o, "R " + where);
        if (ricci(h) != ricci(g)) fail(o, "Ric " + where);
        if (scalar_curvature(h) != scalar_curvature(g) / lambda2)
          fail(o, "r " + where);
        if (!homogeneity_check(pbar, k, g, lambda2)) fail(o, "S " + where);
        checks += 5;
      }
    }
  if (o.pass)
    o.detail = std::to_string(checks) +
               " checks: weights g 2, R 2, Ric 0, r -2, S 2(pbar-k)";
  return o;
}

Outcome normal_tensor_spaces() {
  Outcome o;
  std::string dims;
  for (std::size_t n = 1; n <= 4; ++n) {
    const NormalTensorSpace space(n, 2);
    const std::size_t formula = n * n * (n * n - 1) / 12;
    // rank-nullity with s_3 onto T* (x) S^3
    const std::size_t exact_sequence =
        space.ambient_dimension() - n * symmetric_power_dimension(n, 3);
    dims += (dims.empty() ? "" : ",") + std::to_string(space.dimension());
    if (space.dimension() != formula || space.dimension() != exact_sequence ||
        space.symmetrization_rank() != n * symmetric_power_dimension(n, 3))
      fail(o, "n=" + std::to_string(n));
  }
  o.detail = "dimensions " + dims + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome pfaffian_proportionality() {
  Outcome o;
  std::string constants;
  for (const std::size_t n : {2, 4}) {
    std::optional<Rational> constant;
    std::size_t used = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
      const auto g =
          random_metric_jet(n, Signature::riemannian(n), 2, 9000 + t);
      const Rational pf = pfaffian_density(g);
      if (is_zero(pf)) continue;
      ++used;
      const Rational ratio = s_tensor(0, n / 2, g).flat(0) / pf;
      if (!constant) constant = ratio;
      if (ratio != *constant)
        fail(o, "dim " + std::to_string(n) + " ratio varies at seed " +
                    std::to_string(9000 + t));
    }
    if (!constant || is_zero(*constant))
      fail(o, "dim " + std::to_string(n) + " no nonzero constant");
    constants += (constants.empty() ? "" : ", ") + std::string("dim ") +
                 std::to_string(n) + ": " +
                 (constant ? to_string(*constant) : "none") + " over " +
                 std::to_string(used) + " jets";
  }
  o.detail = "constant " + constants + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion")
      ->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "Einstein tensor vanishes in dimension 2", "exact", 5,
       einstein_identity},
      {2, "S vanishes below 2k+pbar with a witness at 2k+pbar", "exact", 180,
       vanishing_dichotomy},
      {3, "kernel dimensions below and at 2k+pbar", "exact, batch-doubled rank",
       300, kernel_dimensions},
      {4, "invariant-space dimensions and Gram oracle", "exact", 60,
       invariant_dimensions},
      {5, "invariant dimensions stable for n >= m-1", "exact", 0,
       reduction_stabilization},
      {6, "cylinder restriction of R and S", "exact", 0, cylinder_universality},
      {7, "homogeneity weights at lambda^2 in {4,9}", "exact", 0, homogeneity},
      {8, "Riemann-type normal tensor dimensions", "exact", 0,
       normal_tensor_spaces},
      {9, "S(0,n/2) proportional to the Pfaffian in dims 2 and 4", "exact", 0,
       pfaffian_proportionality},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::string timing = "runtime " + seconds(elapsed);
    if (c.limit_seconds > 0) {
      timing += " (limit " + seconds(c.limit_seconds) + ")";
      if (elapsed > c.limit_seconds) outcome.pass = false;
    }
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id
              << ": " << c.name << " | tolerance: " << c.tolerance << " | "
              << timing << " | " << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
