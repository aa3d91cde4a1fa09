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

// Machine-readable run records emitted by the command-line tool.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbs/analysis.hpp"
#include "gbs/binomial.hpp"
#include "gbs/solver.hpp"

namespace gbs::app {

using json = nlohmann::json;

/// Version string stamped into every record.
std::string tool_version();

/// One invocation of a subcommand: its inputs, results and diagnostics.
struct RunRecord {
  std::string command;
  json params;
  json results;
  json diagnostics;
  std::string tool_version;

  json to_json() const;
  static RunRecord from_json(const json& j);

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Complex numbers travel as [re, im].
json encode(std::complex<double> z);
std::complex<double> decode_complex(const json& j);

json encode(const std::vector<std::complex<double>>& zs);
json encode(const StateVector<double>& v);
std::vector<std::complex<double>> decode_complex_list(const json& j);

json encode(const GBSParams<double>& p);
GBSParams<double> decode_gbs_params(const json& j);

json encode(const BinomialParams<double>& p);
BinomialParams<double> decode_binomial_params(const json& j);

json encode(const LimitSchedule<double>& s);
LimitSchedule<double> decode_limit_schedule(const json& j);

json encode(const PhotonStatistics<double>& s);

/// 17 significant digits, as used for CSV output.
std::string format_real(double x);

}  // namespace gbs::app
