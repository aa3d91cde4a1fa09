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

#include "gbs/app/run_record.hpp"

#include <cstdio>

#ifndef GBS_VERSION
#define GBS_VERSION "0.0.0"
#endif

namespace gbs::app {

std::string tool_version() { return GBS_VERSION; }

json RunRecord::to_json() const {
  return json{{"command", command},
              {"params", params},
              {"results", results},
              {"diagnostics", diagnostics},
              {"tool_version", tool_version}};
}

RunRecord RunRecord::from_json(const json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.results = j.at("results");
  r.diagnostics = j.at("diagnostics");
  r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

json encode(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> decode_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json encode(const std::vector<std::complex<double>>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(encode(z));
  return out;
}

json encode(const StateVector<double>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

std::vector<std::complex<double>> decode_complex_list(const json& j) {
  std::vector<std::complex<double>> out;
  for (const auto& z : j) out.push_back(decode_complex(z));
  return out;
}

json encode(const GBSParams<double>& p) {
  return json{{"mu", encode(p.mu)}, {"nu", encode(p.nu)}, {"eta", p.eta}, {"M", p.M}};
}

GBSParams<double> decode_gbs_params(const json& j) {
  return {decode_complex(j.at("mu")), decode_complex(j.at("nu")), j.at("eta").get<double>(), j.at("M").get<int>()};
}

json encode(const BinomialParams<double>& p) { return json{{"eta", p.eta}, {"M", p.M}}; }

BinomialParams<double> decode_binomial_params(const json& j) {
  return {j.at("eta").get<double>(), j.at("M").get<int>()};
}

json encode(const LimitSchedule<double>& s) {
  return json{{"alpha", s.alpha},
              {"m_values", s.m_values},
              {"k_rule", json{{"kind", std::string(to_string(s.k_rule.kind))}, {"offset", s.k_rule.offset}}}};
}

LimitSchedule<double> decode_limit_schedule(const json& j) {
  LimitSchedule<double> s;
  s.alpha = j.at("alpha").get<double>();
  s.m_values = j.at("m_values").get<std::vector<int>>();
  s.k_rule.kind = parse_k_rule(j.at("k_rule").at("kind").get<std::string>());
  s.k_rule.offset = j.at("k_rule").at("offset").get<int>();
  return s;
}

json encode(const PhotonStatistics<double>& s) {
  return json{{"mean", s.mean},
              {"variance", s.variance},
              {"mandel_q", s.mandel_q ? json(*s.mandel_q) : json(nullptr)},
              {"distribution", s.distribution}};
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace gbs::app
