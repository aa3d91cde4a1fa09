// Copyright 2026 The gbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "common.hpp"

using namespace gbs;
using gbs::test::C;
using gbs::test::random_params;

namespace {
std::vector<C> sorted(std::vector<C> v) {
  std::sort(v.begin(), v.end(), [](C a, C b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
  return v;
}
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("dense spectrum examples") {
    Operator<double> d = Operator<double>::Zero(3, 3);
    d.diagonal() << 1, 2, 3;
    auto ev = sorted(oracle::dense_spectrum(d));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ev[i] - double(i + 1)) < 1e-14);

    Operator<double> rot(2, 2);
    rot << 0, 1, -1, 0;
    ev = sorted(oracle::dense_spectrum(rot));
    CHECK(std::abs(ev[0] - C(0, -1)) < 1e-14);
    CHECK(std::abs(ev[1] - C(0, 1)) < 1e-14);

    const auto l = build_operator(GBSParams<double>{{0.7, 0.3}, {0, 0}, 0.4, 6});
    ev = sorted(oracle::dense_spectrum(l));
    std::vector<C> diag;
    for (int i = 0; i < 7; ++i) diag.push_back(l(i, i));
    diag = sorted(diag);
    for (int i = 0; i < 7; ++i) CHECK(std::abs(ev[i] - diag[i]) < 1e-12);
  }

  TEST_CASE("Hermitian spectra are real") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ph(-3, 3);
    for (int M : {2, 8, 20}) {
      const C mu = std::polar(1.1, ph(rng));
      const auto l = build_operator(GBSParams<double>{mu, std::conj(mu), 0.6, M});
      for (const auto& e : oracle::dense_spectrum(l)) CHECK(std::abs(e.imag()) <= 1e-11 * l.norm());
    }
  }

  TEST_CASE("trace and determinant spot check") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
      auto p = random_params(rng, 7);
      const auto l = build_operator(p);
      const auto ev = oracle::dense_spectrum(l);
      C sum = 0, prod = 1;
      for (const auto& e : ev) {
        sum += e;
        prod *= e;
      }
      CHECK(std::abs(sum - l.trace()) <= 1e-11 * (1 + l.norm()));
      const C det = l.determinant();
      CHECK(std::abs(prod - det) <= 1e-9 * std::max(1.0, std::abs(det)));
    }
  }

  TEST_CASE("null eigenvector") {
    const auto n = number_operator(3);
    const auto v = oracle::null_eigenvector(n, C(2));
    CHECK(fidelity(v, basis_state<double>(2, 4)) >= 1 - 1e-12);

    const GBSParams<double> p{{1, 0}, {0, 0}, 0.25, 2};
    const auto w = oracle::null_eigenvector(build_operator(p), C(0.5));
    CHECK(fidelity(w, eigenstate_sum(p, 2)) >= 1 - 1e-9);

    const GBSParams<double> h{{0.6, 0.8}, {0.6, -0.8}, 0.3, 6};
    const auto lh = build_operator(h);
    for (const auto& e : oracle::dense_spectrum(lh)) {
      const auto u = oracle::null_eigenvector(lh, e);
      CHECK((lh * u - e * u).norm() <= 1e-10 * lh.norm());
    }
    CHECK_THROWS_AS(oracle::null_eigenvector(n, C(2.5)), ConvergenceError);
  }

  TEST_CASE("compare reports") {
    const GBSParams<double> p{{1.3, -0.2}, {0, 0}, 0.6, 8};
    auto rep = oracle::compare(p, solve(p));
    CHECK(rep.max_pair_error <= 1e-12);
    CHECK(rep.pairing.size() == 9);
    CHECK_FALSE(rep.multiplicity_collapse);

    std::mt19937_64 rng(77);
    for (int i = 0; i < 40; ++i) {
      const auto q = random_params(rng);
      const auto sol = solve(q);
      rep = oracle::compare(q, sol);
      double max_delta = 0;
      for (const auto& d : sol.eigenvalues) max_delta = std::max(max_delta, std::abs(d));
      CHECK(rep.max_pair_error <= 1e-9 * (1 + max_delta));
      CHECK(rep.max_residual <= 1e-10 * rep.operator_norm);
    }

    const double eta = 0.5;
    const GBSParams<double> defective{{1, 0}, {-eta / (4 * (1 - eta)), 0}, eta, 3};
    rep = oracle::compare(defective, solve(defective));
    CHECK(rep.multiplicity_collapse);
  }

  TEST_CASE("pairing rejects mismatched sizes") {
    CHECK_THROWS_AS(oracle::pair_spectra(std::vector<C>{1, 2}, std::vector<C>{1}), DimensionMismatch);
    const auto [pairs, err] = oracle::pair_spectra(std::vector<C>{3, 1, 2}, std::vector<C>{1.1, 2, 3});
    CHECK(err == doctest::Approx(0.1));
    CHECK(pairs.size() == 3);
  }
}
