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
#include <numbers>

#include <doctest.h>

#include "common.hpp"

using namespace gbs;
using gbs::test::C;
using std::numbers::pi;

TEST_SUITE("analysis") {
  TEST_CASE("coherent state") {
    CHECK((coherent_state(C(0), 10) - basis_state<double>(0, 10)).norm() == 0);
    const auto v = coherent_state(C(1), 40);
    CHECK(photon_statistics(v).mean == doctest::Approx(1).epsilon(1e-10));
    const C alpha(0.6, -0.9);
    const auto w = coherent_state(alpha, 60);
    const auto a = annihilation_operator(59);
    StateVector<double> res = a * w - alpha * w;
    res(59) = 0;  // truncation edge
    CHECK(res.norm() <= 1e-10);
    CHECK_THROWS_AS(coherent_state(C(3), 10), InvalidArgument);
    CHECK(reference_dim(1.0, 10) == 64);
    CHECK(reference_dim(2.5, 500) == 500);
  }

  TEST_CASE("squeezed eigenstate") {
    const C lambda(0.3, 0.2);
    CHECK(fidelity(squeezed_eigenstate(C(1), C(0), lambda, 60), coherent_state(lambda, 60)) >= 1 - 1e-14);
    CHECK(fidelity(squeezed_eigenstate(C(2), C(0), lambda, 60), coherent_state(lambda / 2.0, 60)) >= 1 - 1e-14);

    const auto vac = squeezed_eigenstate(C(1), C(0.3), C(0), 60);
    for (int n = 1; n < 60; n += 2) CHECK(vac(n) == C(0));

    const auto s = squeezed_eigenstate(C(1), C(0.5), C(0.4), 80);
    CHECK(ladder_eigen_residual(C(1), C(0.5), C(0.4), s) <= 1e-9);

    CHECK_THROWS_AS(squeezed_eigenstate(C(1), C(1), C(0), 60), InvalidArgument);
    CHECK_THROWS_AS(squeezed_eigenstate(C(1), C(0.9), C(0), 20), InvalidArgument);
  }

  TEST_CASE("photon statistics") {
    const auto b = photon_statistics(binomial_amplitudes(BinomialParams<double>{0.3, 20}));
    CHECK(b.mean == doctest::Approx(6).epsilon(1e-12));
    CHECK(b.variance == doctest::Approx(4.2).epsilon(1e-12));
    REQUIRE(b.mandel_q.has_value());
    CHECK(*b.mandel_q == doctest::Approx(-0.3).epsilon(1e-12));

    const auto c = photon_statistics(coherent_state(C(1.5, 0.5), 80));
    REQUIRE(c.mandel_q.has_value());
    CHECK(std::abs(*c.mandel_q) <= 1e-8);

    const auto k = photon_statistics(basis_state<double>(3, 6));
    CHECK(k.variance == 0);
    CHECK(*k.mandel_q == -1);

    CHECK_FALSE(photon_statistics(basis_state<double>(0, 4)).mandel_q.has_value());
  }

  TEST_CASE("time evolution") {
    const auto v = solve_eigenstate(GBSParams<double>{{0.8, 0.5}, {0.3, -0.1}, 0.4, 7}, 3);
    CHECK((time_evolve(v, 1.3, 0.0) - v).norm() == 0);
    const auto full = time_evolve(v, 2.0, pi);  // omega t = 2 pi
    CHECK(fidelity(full, v) >= 1 - 1e-14);
    CHECK(std::abs(inner(v, full) + 1.0) < 1e-12);  // global phase e^{-i pi}

    const auto e = time_evolve(v, 0.7, 3.1);
    CHECK(std::abs(e.norm() - v.norm()) < 1e-15);
    const auto s0 = photon_statistics(v), s1 = photon_statistics(e);
    for (size_t n = 0; n < s0.distribution.size(); ++n)
      CHECK(s1.distribution[n] == doctest::Approx(s0.distribution[n]).epsilon(1e-14));

    const double eta = 0.3;
    for (int k : {0, 4, 8}) {
      const auto start = nu_zero_eigenstate(C(1), eta, 8, k);
      const auto moved = time_evolve(start, 1.0, pi / 3);
      CHECK(fidelity(moved, nu_zero_eigenstate(std::polar(1.0, pi / 3), eta, 8, k)) >= 1 - 1e-12);
    }
  }

  TEST_CASE("su(2) coherent form") {
    CHECK(fidelity(su2_coherent_form(0.35, 0.0, 9), binomial_amplitudes(BinomialParams<double>{0.35, 9})) >=
          1 - 1e-12);
    const double eta = 0.3;
    const auto v = su2_coherent_form(eta, pi / 2, 1);
    CHECK(std::abs(v(0)) == doctest::Approx(std::sqrt(1 - eta)));
    CHECK(std::abs(v(1)) == doctest::Approx(std::sqrt(eta)));
    CHECK(std::abs(std::abs(std::arg(v(1) / v(0))) - pi / 2) < 1e-12);
    for (double phi : {0.4, pi / 2, -2.0})
      CHECK(fidelity(su2_coherent_form(eta, phi, 6), nu_zero_eigenstate(std::polar(1.0, phi), eta, 6, 6)) >=
            1 - 1e-12);
    CHECK(fidelity(su2_coherent_form(1e-10, 0.3, 5), basis_state<double>(0, 6)) >= 1 - 1e-9);
  }

  TEST_CASE("k rules and schedules") {
    CHECK((KRule{KRuleKind::Center, 0}.index(10)) == 5);
    CHECK((KRule{KRuleKind::TopOffset, 2}.index(10)) == 8);
    CHECK((KRule{KRuleKind::Bottom, 1}.index(10)) == 1);
    CHECK_THROWS_AS((KRule{KRuleKind::TopOffset, 20}.index(10)), InvalidArgument);
    CHECK(parse_k_rule("top") == KRuleKind::TopOffset);
    CHECK_THROWS_AS(parse_k_rule("middle"), InvalidArgument);
    CHECK_THROWS_AS((LimitSchedule<double>{1, {}, {}}.validate()), InvalidArgument);
    CHECK_THROWS_AS((LimitSchedule<double>{1, {100, 50}, {}}.validate()), InvalidArgument);
    CHECK_THROWS_AS((LimitSchedule<double>{2, {3}, {}}.validate()), InvalidArgument);
  }

  TEST_CASE("number limit") {
    const std::vector<double> etas{0.9, 0.99, 0.999, 0.9999};
    const auto rows = number_limit_scan(C(1), C(0.4), 6, 2, etas);
    REQUIRE(rows.size() == 4);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].fidelity > rows[i - 1].fidelity);

    const auto top = number_limit_scan(C(1), C(0), 6, 6, std::vector<double>{1 - 1e-6});
    CHECK(top[0].fidelity >= 0.9999);

    for (int k = 0; k <= 6; ++k) {
      const auto two = number_limit_scan(C(1), C(0.4), 6, k, std::vector<double>{0.5, 0.99});
      CHECK(two[1].fidelity > two[0].fidelity);
    }
    CHECK_THROWS_AS(number_limit_scan(C(1), C(0), 6, 2, std::vector<double>{0.99, 0.9}), InvalidArgument);
    CHECK_THROWS_AS(number_limit_scan(C(1), C(0), 6, 2, std::vector<double>{}), InvalidArgument);
  }

  TEST_CASE("coherent and vacuum limits") {
    const LimitSchedule<double> top{1, {50, 100, 200, 400}, {KRuleKind::TopOffset, 0}};
    const auto rows = coherent_limit_scan(0.0, top);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].fidelity > rows[i - 1].fidelity);
    CHECK(rows.back().fidelity >= 0.999);

    const LimitSchedule<double> bottom{1, {50, 400}, {KRuleKind::Bottom, 0}};
    CHECK(coherent_limit_scan(0.0, bottom).back().fidelity >= 0.999);
  }

  TEST_CASE("center limit lands on alpha/2") {
    const LimitSchedule<double> center{1, {50, 100, 200}, {KRuleKind::Center, 0}};
    const auto rows = coherent_limit_scan(0.7, center);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].fidelity > rows[i - 1].fidelity);
    CHECK(rows.back().fidelity >= 0.99);
    const auto verdict = center_amplitude_verdict(0.7, center);
    CHECK(verdict.winner == "alpha/2");
    CHECK(verdict.fidelity_inv_sqrt2.back() < 0.99);
  }

  TEST_CASE("squeezed limit") {
    const LimitSchedule<double> s{1, {50, 100, 200}, {KRuleKind::Center, 0}};
    const auto rows = squeezed_limit_scan(C(1), C(0.3), s);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].residual < rows[i - 1].residual);
    CHECK(rows.back().fidelity >= 0.99);
    CHECK_THROWS_AS(squeezed_limit_scan(C(1), C(1.2), s), InvalidArgument);
  }
}
