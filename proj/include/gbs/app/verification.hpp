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

// The acceptance battery: every exit criterion of the project, runnable from
// the test harness and from `gbs verify`.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gbs::app {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// One-line human summary with the worst observed values.
  std::string detail;
  nlohmann::json metrics;
};

struct VerifyOptions {
  /// Multiplies every tolerance; 1 reproduces the pinned acceptance values.
  double tolerance_scale = 1.0;
  /// Restrict to these criterion ids (empty = all).
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// Reads GBS_TOLERANCE_OVERRIDE; 1.0 when unset. Throws InvalidArgument on a
/// malformed or non-positive value.
double tolerance_scale_from_env();

}  // namespace gbs::app
