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

// Binomial states |eta, M> = sum_n [C(M,n) eta^n (1-eta)^(M-n)]^{1/2} |n>,
// their ladder-operator characterization and their SU(2) displacement form.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "gbs/fock.hpp"
#include "gbs/su2.hpp"

namespace gbs {

template <typename Real = double>
struct BinomialParams {
  Real eta = 0;
  int M = 0;

  /// Closed interval: eta = 0 and eta = 1 give |0> and |M>.
  void validate() const {
    detail::require_nonneg_order(M);
    if (!(eta >= Real(0) && eta <= Real(1)))
      throw InvalidArgument("binomial: eta must satisfy 0 <= eta <= 1, got " + std::to_string(double(eta)));
  }

  void validate_open() const {
    detail::require_nonneg_order(M);
    if (!(eta > Real(0) && eta < Real(1)))
      throw InvalidArgument("binomial: eta must satisfy 0 < eta < 1, got " + std::to_string(double(eta)));
  }
};

/// Largest M for which the distribution is formed as a direct product.
inline constexpr int kDirectBinomialLimit = 1000;

/// log C(M, n) via log-gamma; finite for any M that fits in an int.
template <typename Real = double>
Real log_binomial_coefficient(int M, int n) {
  if (n < 0 || n > M) throw InvalidArgument("log_binomial_coefficient: need 0 <= n <= M");
  return std::lgamma(Real(M + 1)) - std::lgamma(Real(n + 1)) - std::lgamma(Real(M - n + 1));
}

/// P(n) = C(M,n) eta^n (1-eta)^(M-n), n = 0..M.
template <typename Real>
std::vector<Real> binomial_distribution(const BinomialParams<Real>& p) {
  p.validate();
  std::vector<Real> probs(p.M + 1, Real(0));
  if (p.eta == Real(0)) {
    probs.front() = 1;
    return probs;
  }
  if (p.eta == Real(1)) {
    probs.back() = 1;
    return probs;
  }
  const Real rest = 1 - p.eta;
  // Direct product keeps each term within a few ulps; the log form is only
  // used where C(M,n) or the powers leave the representable range.
  const Real log_eta = std::log(p.eta);
  const Real log_rest = std::log1p(-p.eta);
  for (int n = 0; n <= p.M; ++n) {
    const Real direct = p.M <= kDirectBinomialLimit
                            ? boost::math::binomial_coefficient<Real>(p.M, n) * std::pow(p.eta, n) *
                                  std::pow(rest, p.M - n)
                            : Real(0);
    probs[n] = std::isnormal(direct)
                   ? direct
                   : std::exp(log_binomial_coefficient<Real>(p.M, n) + n * log_eta + (p.M - n) * log_rest);
  }
  return probs;
}

template <typename Real>
StateVector<Real> binomial_amplitudes(const BinomialParams<Real>& p) {
  const auto probs = binomial_distribution(p);
  StateVector<Real> v(p.M + 1);
  for (int n = 0; n <= p.M; ++n) v(n) = std::sqrt(probs[n]);
  return v;
}

/// || (sqrt(eta) N + sqrt(1-eta) J+ - sqrt(eta) M) |eta, M> ||.
template <typename Real>
Real ladder_residual(const BinomialParams<Real>& p) {
  p.validate_open();
  const auto j = hp_generators<Real>(p.M);
  const Operator<Real> ladder = std::sqrt(p.eta) * number_operator<Real>(p.M) + std::sqrt(1 - p.eta) * j.plus -
                                std::sqrt(p.eta) * Real(p.M) * Operator<Real>::Identity(p.M + 1, p.M + 1);
  return (ladder * binomial_amplitudes(p)).norm();
}

/// Same eigenvalue relation written with the su(2) generators:
/// || (sqrt(eta) J0 - sqrt(1-eta) J+ + sqrt(eta) M/2) |eta, M> ||.
template <typename Real>
Real ladder_residual_su2(const BinomialParams<Real>& p) {
  p.validate_open();
  const auto j = hp_generators<Real>(p.M);
  const Operator<Real> ladder = std::sqrt(p.eta) * j.zero - std::sqrt(1 - p.eta) * j.plus +
                                std::sqrt(p.eta) * Real(p.M) / 2 * Operator<Real>::Identity(p.M + 1, p.M + 1);
  return (ladder * binomial_amplitudes(p)).norm();
}

/// |eta, M> = exp(-r (J+ - J-)) |0> with sin r = sqrt(eta), 0 < r < pi/2.
template <typename Real>
StateVector<Real> binomial_displacement_form(const BinomialParams<Real>& p) {
  p.validate_open();
  const Real r = std::asin(std::sqrt(p.eta));
  const auto j = hp_generators<Real>(p.M);
  return matrix_exp(Operator<Real>(-r * (j.plus - j.minus))).col(0);
}

}  // namespace gbs
