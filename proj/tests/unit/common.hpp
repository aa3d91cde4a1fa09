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

#pragma once

#include <complex>
#include <random>

#include "gbs/gbs.hpp"

namespace gbs::test {

using C = std::complex<double>;

inline double frob(const Operator<double>& a) { return a.norm(); }

inline GBSParams<double> random_params(std::mt19937_64& rng, int max_M = 12) {
  std::uniform_real_distribution<double> mag(0.05, 2.0), phase(-3.14159, 3.14159), eta(0.05, 0.95);
  std::uniform_int_distribution<int> order(0, max_M);
  return {std::polar(mag(rng), phase(rng)), std::polar(mag(rng), phase(rng)), eta(rng), order(rng)};
}

}  // namespace gbs::test
