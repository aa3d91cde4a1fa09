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

// Subcommands of the `gbs` tool. Each writes its payload to `out`, messages
// to `err`, and returns the process exit code.
#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gbs/solver.hpp"

namespace gbs::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);

struct BinomialOptions {
  double eta = 0.5;
  int M = 1;
  Format format = Format::Json;
};

struct GbsOptions {
  std::complex<double> mu{1, 0};
  std::complex<double> nu{0, 0};
  double eta = 0.5;
  int M = 1;
  RootPolicy root = RootPolicy::Principal;
  std::optional<int> k;
  Format format = Format::Json;
};

struct LimitOptions {
  std::string mode;  // number | squeezed | coherent
  std::complex<double> mu{1, 0};
  std::complex<double> nu{0, 0};
  // number mode
  int M = 6;
  int k = 0;
  std::vector<double> etas;
  // squeezed / coherent modes
  double alpha = 1;
  std::vector<int> m_values;
  std::string rule = "center";
  int offset = 0;
  double phi = 0;
  Format format = Format::Csv;
};

/// Source state: the nu = 0 eigenstate k with mu = e^{i phi}.
struct EvolveOptions {
  double eta = 0.5;
  int M = 1;
  int k = 0;
  double phi = 0;
  double omega = 1;
  double t = 0;
  Format format = Format::Json;
};

struct VerifyCommandOptions {
  std::vector<int> only;
  Format format = Format::Text;
};

int cmd_binomial(const BinomialOptions& o, std::ostream& out, std::ostream& err);
int cmd_gbs(const GbsOptions& o, std::ostream& out, std::ostream& err);
int cmd_limit(const LimitOptions& o, std::ostream& out, std::ostream& err);
int cmd_evolve(const EvolveOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyCommandOptions& o, std::ostream& out, std::ostream& err);

}  // namespace gbs::app
