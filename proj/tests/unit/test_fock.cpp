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

#include <cmath>

#include <doctest.h>

#include "common.hpp"

using namespace gbs;
using gbs::test::C;
using gbs::test::frob;

TEST_SUITE("fock") {
  TEST_CASE("annihilation operator entries") {
    CHECK(annihilation_operator(0).size() == 1);
    CHECK(annihilation_operator(0)(0, 0) == C(0));

    const auto a = annihilation_operator(2);
    CHECK(a(0, 1) == C(1));
    CHECK(std::abs(a(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK((a.cwiseAbs().sum() - 1 - std::sqrt(2.0)) == doctest::Approx(0).epsilon(1e-15));

    const auto a3 = annihilation_operator(3);
    Operator<double> expected = Operator<double>::Zero(4, 4);
    for (int n = 0; n <= 3; ++n) expected(n, n) = n;
    CHECK((a3.adjoint() * a3 - expected).norm() < 1e-14);
  }

  TEST_CASE("creation and number operators") {
    const auto ad = creation_operator(1);
    CHECK(ad(1, 0) == C(1));
    CHECK(ad.cwiseAbs().sum() == doctest::Approx(1));
    const auto n = number_operator(2);
    CHECK(n(1, 1) == C(1));
    CHECK(n(2, 2) == C(2));
    CHECK(n.cwiseAbs().sum() == doctest::Approx(3));
    for (int M : {0, 3, 9}) {
      const auto a = annihilation_operator(M);
      CHECK((creation_operator(M) * a - number_operator(M)).norm() < 1e-13);
    }
    CHECK_THROWS_AS(annihilation_operator(-1), InvalidArgument);
  }

  TEST_CASE("Holstein-Primakoff generators") {
    const auto j1 = hp_generators(1);
    CHECK(j1.zero(0, 0) == C(0.5));
    CHECK(j1.zero(1, 1) == C(-0.5));
    CHECK(j1.plus(0, 1) == C(1));

    const auto j2 = hp_generators(2);
    CHECK(std::abs(j2.plus(0, 1) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(j2.plus(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK((j2.minus - j2.plus.adjoint()).norm() == 0);

    for (int M = 0; M <= 40; ++M) {
      const auto j = hp_generators(M);
      CHECK(frob(commutator(j.zero, j.plus) - j.plus) < 1e-12);
      CHECK(frob(commutator(j.zero, j.minus) + j.minus) < 1e-12);
      CHECK(frob(commutator(j.plus, j.minus) - 2.0 * j.zero) < 1e-12);
    }
  }

  TEST_CASE("J+ is nilpotent of index M+1") {
    for (int M : {1, 4, 11}) {
      const auto j = hp_generators(M);
      Operator<double> p = Operator<double>::Identity(M + 1, M + 1);
      for (int i = 0; i < M; ++i) p = p * j.plus;
      CHECK(p.norm() > 0);
      p = p * j.plus;
      CHECK(p.norm() == 0);
    }
  }

  TEST_CASE("matrix exponential") {
    CHECK((matrix_exp(Operator<double>::Zero(3, 3)) - Operator<double>::Identity(3, 3)).norm() == 0);

    Operator<double> d = Operator<double>::Zero(2, 2);
    d(0, 0) = C(0, detail::pi<double>());
    const auto ed = matrix_exp(d);
    CHECK(std::abs(ed(0, 0) + 1.0) < 1e-13);
    CHECK(std::abs(ed(1, 1) - 1.0) < 1e-13);
    CHECK(std::abs(ed(0, 1)) < 1e-13);

    const auto j = hp_generators(1);
    const double r = detail::pi<double>() / 4;
    const auto rot = matrix_exp(Operator<double>(r * (j.minus - j.plus)));
    const double c = std::cos(r), s = std::sin(r);
    CHECK(std::abs(rot(0, 0) - c) < 1e-14);
    CHECK(std::abs(rot(1, 1) - c) < 1e-14);
    CHECK(std::abs(rot(0, 1) + s) < 1e-14);
    CHECK(std::abs(rot(1, 0) - s) < 1e-14);

    CHECK_THROWS_AS(matrix_exp(Operator<double>::Zero(2, 3)), DimensionMismatch);
  }

  TEST_CASE("matrix exponential inverse pair up to Frobenius norm 50") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
      const int dim = 2 + trial % 9;
      Operator<double> h(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) h(i, k) = C(g(rng), g(rng));
      Operator<double> a = h - h.adjoint();  // anti-Hermitian: exp(A) is unitary
      a *= (50.0 * (trial + 1) / 20) / a.norm();
      const Operator<double> prod = matrix_exp(a) * matrix_exp(Operator<double>(-a));
      CHECK((prod - Operator<double>::Identity(dim, dim)).norm() < 1e-11);
    }
  }

  TEST_CASE("inner products and fidelity") {
    const auto v0 = basis_state<double>(0, 3), v1 = basis_state<double>(1, 3);
    CHECK(fidelity(v0, v0) == doctest::Approx(1));
    CHECK(fidelity(v0, v1) == 0);
    StateVector<double> u(3);
    u << C(0.3, 0.1), C(-1, 2), C(0.5, 0);
    CHECK(fidelity(u, StateVector<double>(std::polar(1.0, 1.234) * u)) == doctest::Approx(1).epsilon(1e-15));
    CHECK(std::abs(inner(StateVector<double>(C(0, 1) * u), u) - C(0, -1) * u.squaredNorm()) < 1e-14);
    CHECK(norm(u) == doctest::Approx(u.norm()));
    CHECK_THROWS_AS(fidelity(u, StateVector<double>(StateVector<double>::Zero(3))), InvalidArgument);
    CHECK_THROWS_AS(inner(u, v0.head(2).eval()), DimensionMismatch);
  }

  TEST_CASE("commutator and apply") {
    const auto n = number_operator(4);
    CHECK(commutator(n, n).norm() == 0);
    const int M = 4;
    const auto a = annihilation_operator(M);
    Operator<double> expected = Operator<double>::Identity(M + 1, M + 1);
    expected(M, M) -= double(M + 1);
    CHECK((commutator(a, Operator<double>(a.adjoint())) - expected).norm() < 1e-13);
    const auto v = gbs::apply(n, basis_state<double>(2, 5));
    CHECK((v - 2.0 * basis_state<double>(2, 5)).norm() == 0);
    CHECK_THROWS_AS(gbs::apply(n, basis_state<double>(0, 3)), DimensionMismatch);
  }

  TEST_CASE("canonical phase and padding") {
    StateVector<double> v(3);
    v << C(0, 0), C(0, -2), C(1, 1);
    const auto c = canonicalize(v);
    CHECK(is_normalized(c));
    CHECK(c(0) == C(0));
    CHECK(std::abs(c(1).imag()) < 1e-15);
    CHECK(c(1).real() > 0);
    const auto p = zero_pad(c, 5);
    CHECK(p.size() == 5);
    CHECK(p(4) == C(0));
  }

  TEST_CASE("long double instantiation") {
    const auto j = hp_generators<long double>(6);
    CHECK((commutator(j.plus, j.minus) - (long double)2 * j.zero).norm() < 1e-16L);
    const auto u = matrix_exp(Operator<long double>(0.7L * (j.minus - j.plus)), 1e-18L);
    CHECK(is_unitary(u, 1e-15L));
  }
}
