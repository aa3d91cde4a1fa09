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
#include <limits>
#include <random>

#include <doctest.h>

#include "gbs/app/run_record.hpp"

using namespace gbs;
using namespace gbs::app;
using C = std::complex<double>;

TEST_SUITE("run_record") {
  TEST_CASE("complex values travel as pairs") {
    const json j = encode(C(1.5, -0.25));
    CHECK(j.is_array());
    CHECK(j.size() == 2);
    CHECK(decode_complex(j) == C(1.5, -0.25));
    CHECK_THROWS(decode_complex(json::array({1.0})));
  }

  TEST_CASE("parameter round trips") {
    const GBSParams<double> p{{0.1, 0.2}, {-3, 1e-300}, 0.123456789012345678, 7};
    const auto q = decode_gbs_params(json::parse(encode(p).dump()));
    CHECK(q.mu == p.mu);
    CHECK(q.nu == p.nu);
    CHECK(q.eta == p.eta);
    CHECK(q.M == p.M);

    const BinomialParams<double> b{1.0 / 3, 12};
    const auto b2 = decode_binomial_params(json::parse(encode(b).dump()));
    CHECK(b2.eta == b.eta);
    CHECK(b2.M == b.M);

    const LimitSchedule<double> s{0.7, {50, 100}, {KRuleKind::TopOffset, 2}};
    const auto s2 = decode_limit_schedule(json::parse(encode(s).dump()));
    CHECK(s2.alpha == s.alpha);
    CHECK(s2.m_values == s.m_values);
    CHECK(s2.k_rule.kind == s.k_rule.kind);
    CHECK(s2.k_rule.offset == s.k_rule.offset);
  }

  TEST_CASE("random records round trip bit for bit") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    std::uniform_int_distribution<int> e(-300, 300);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<C> zs;
      for (int i = 0; i < 5; ++i) zs.emplace_back(std::ldexp(u(rng), e(rng)), u(rng));
      RunRecord r;
      r.command = "gbs";
      r.params = encode(GBSParams<double>{zs[0], zs[1], 0.5, trial % 9});
      r.results = {{"spectrum", encode(zs)}, {"kind", "generic"}};
      r.diagnostics = {{"residual", u(rng)}};
      r.tool_version = tool_version();
      const auto back = RunRecord::from_json(json::parse(r.to_json().dump()));
      CHECK(back == r);
      const auto zs2 = decode_complex_list(back.results["spectrum"]);
      for (size_t i = 0; i < zs.size(); ++i) CHECK(zs2[i] == zs[i]);
    }
  }

  TEST_CASE("undefined Mandel Q is null") {
    PhotonStatistics<double> s;
    s.distribution = {1.0};
    CHECK(encode(s)["mandel_q"].is_null());
    s.mandel_q = -0.5;
    CHECK(encode(s)["mandel_q"].get<double>() == -0.5);
  }

  TEST_CASE("seventeen significant digits") {
    const double x = 0.1;
    CHECK(format_real(x) == "0.10000000000000001");
    CHECK(std::stod(format_real(1.0 / 3)) == 1.0 / 3);
  }

  TEST_CASE("missing fields are rejected") {
    CHECK_THROWS(RunRecord::from_json(json::object()));
    CHECK_THROWS(decode_gbs_params(json{{"mu", encode(C(1))}}));
  }
}
