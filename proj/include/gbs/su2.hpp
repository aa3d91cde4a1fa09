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

// SU(2) displacement operators D(zeta) = exp(zeta J+ - zeta^* J-) in the
// Holstein-Primakoff realization, their disentangled product form and the
// adjoint action on the generators.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>

#include "gbs/fock.hpp"

namespace gbs {

/// zeta = r e^{i theta} on the (M+1)-dimensional space.
template <typename Real = double>
struct DisplacementParams {
  Real r = 0;
  Real theta = 0;
  int M = 0;

  std::complex<Real> zeta() const { return std::polar(r, theta); }

  static DisplacementParams from_zeta(std::complex<Real> zeta, int M) {
    detail::require_nonneg_order(M);
    const Real r = std::abs(zeta);
    return {r, r == Real(0) ? Real(0) : std::arg(zeta), M};
  }
};

/// Inverts Delta = e^{-i theta} tan r with r in [0, pi/2) and theta in (-pi, pi].
/// Delta = 0 maps to the identity displacement (r = theta = 0).
template <typename Real>
DisplacementParams<Real> delta_to_zeta(std::complex<Real> delta, int M) {
  detail::require_nonneg_order(M);
  if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag()))
    throw InvalidArgument("delta_to_zeta: non-finite delta");
  const Real mag = std::abs(delta);
  if (mag == Real(0)) return {Real(0), Real(0), M};
  Real theta = -std::arg(delta);
  if (theta <= -std::numbers::pi_v<Real>) theta += 2 * std::numbers::pi_v<Real>;
  return {std::atan(mag), theta, M};
}

template <typename Real>
Operator<Real> displacement(const DisplacementParams<Real>& p) {
  const auto j = hp_generators<Real>(p.M);
  const std::complex<Real> z = p.zeta();
  return matrix_exp(Operator<Real>(z * j.plus - std::conj(z) * j.minus));
}

namespace detail {

/// Working precision for the disentangled product. Its three factors have
/// entries as large as (1 + tan^2|xi|)^{M/2} that cancel to a unitary result,
/// so double loses every digit near |xi| ~ 1.4 at M ~ 20.
template <typename Real>
struct wide_real {
  using type = boost::multiprecision::float128;
};

template <typename Real>
using wide_real_t = typename wide_real<Real>::type;

/// exp(c J+) as an exact finite sum: entry (l, l+j) is
/// c^j / j! * prod_{i<j} sqrt((l+i+1)(M-l-i)). exp(c J-) is its transpose.
template <typename Work>
Operator<Work> raising_exp(std::complex<Work> c, int M) {
  using std::sqrt;
  Operator<Work> e = Operator<Work>::Zero(M + 1, M + 1);
  for (int l = 0; l <= M; ++l) {
    std::complex<Work> entry(1);
    e(l, l) = entry;
    for (int j = 1; l + j <= M; ++j) {
      const int i = j - 1;
      entry *= c * sqrt(Work(l + i + 1) * Work(M - l - i)) / Work(j);
      e(l, l + j) = entry;
    }
  }
  return e;
}

template <typename Work>
Operator<Work> disentangled_product(std::complex<Work> xi, int M) {
  using std::abs, std::tan, std::log, std::exp;
  const Work mag = abs(xi);
  const std::complex<Work> tau = mag == Work(0) ? std::complex<Work>(0) : (xi / mag) * tan(mag);

  const Work log_weight = log(Work(1) + tau.real() * tau.real() + tau.imag() * tau.imag());
  Eigen::Matrix<std::complex<Work>, Eigen::Dynamic, 1> middle(M + 1);
  for (int n = 0; n <= M; ++n) middle(n) = exp(-log_weight * (Work(M) / 2 - Work(n)));

  const Operator<Work> lower = raising_exp<Work>(-conj(tau), M).transpose();  // exp(-tau^* J-)
  const Operator<Work> upper = raising_exp<Work>(tau, M);                     // exp(tau J+)
  return lower * middle.asDiagonal() * upper;
}

}  // namespace detail

/// Disentangled form
///   exp(xi J+ - xi^* J-) = exp(-tau^* J-) exp(-ln(1+|tau|^2) J0) exp(tau J+),
/// with xi = |xi| e^{-i phi} and tau = e^{-i phi} tan|xi|. The outer factors are
/// exact finite sums since J+ and J- are nilpotent; the product is formed in
/// quad precision and rounded to Real. Undefined where tan|xi| diverges.
///
/// The product only sees tan|xi|, so it equals D(xi) for |xi| < pi/2 and
/// (-1)^(M n) D(xi) with n = round(|xi| / pi) beyond; in particular it is the
/// identity at |xi| = m pi, where D(xi) itself is (-1)^(m M).
template <typename Real>
Operator<Real> disentangled_displacement(std::complex<Real> xi, int M) {
  using std::abs, std::fmod, std::min;
  detail::require_nonneg_order(M);
  const Real pi = detail::pi<Real>();
  Real offset = fmod(abs(xi) - pi / 2, pi);
  if (offset < 0) offset += pi;
  if (min(offset, pi - offset) < Real(1e-8))
    throw DomainError("disentangled_displacement: |xi| is within 1e-8 of pi/2 + m pi");

  using Work = detail::wide_real_t<Real>;
  const auto wide = detail::disentangled_product(std::complex<Work>(Work(xi.real()), Work(xi.imag())), M);
  return wide.unaryExpr([](const std::complex<Work>& z) {
    return std::complex<Real>(static_cast<Real>(z.real()), static_cast<Real>(z.imag()));
  });
}

template <typename Real = double>
struct ConjugatedGenerators {
  Operator<Real> plus;   // D^-1 J+ D
  Operator<Real> minus;  // D^-1 J- D
  Operator<Real> zero;   // D^-1 J0 D
};

/// Closed-form adjoint action of D(zeta) on the generators:
///   D^-1 J+ D = J+ cos^2 r - J- sin^2 r e^{-2i theta} - J0 sin 2r e^{-i theta}
///   D^-1 J- D = J- cos^2 r - J+ sin^2 r e^{ 2i theta} - J0 sin 2r e^{ i theta}
///   D^-1 J0 D = (J+ e^{i theta} + J- e^{-i theta}) sin(2r)/2 + J0 cos 2r
template <typename Real>
ConjugatedGenerators<Real> conjugated_generators(const DisplacementParams<Real>& p) {
  const auto j = hp_generators<Real>(p.M);
  const Real c2 = std::cos(p.r) * std::cos(p.r);
  const Real s2 = std::sin(p.r) * std::sin(p.r);
  const Real sin2r = std::sin(2 * p.r);
  const Real cos2r = std::cos(2 * p.r);
  const std::complex<Real> e1 = std::polar(Real(1), p.theta);
  const std::complex<Real> e2 = e1 * e1;

  ConjugatedGenerators<Real> out;
  out.plus = c2 * j.plus - (s2 * std::conj(e2)) * j.minus - (sin2r * std::conj(e1)) * j.zero;
  out.minus = c2 * j.minus - (s2 * e2) * j.plus - (sin2r * e1) * j.zero;
  out.zero = (sin2r / 2) * (e1 * j.plus + std::conj(e1) * j.minus) + cos2r * j.zero;
  return out;
}

}  // namespace gbs
