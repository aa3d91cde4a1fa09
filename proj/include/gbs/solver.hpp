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

// Closed-form solution of the generalized binomial state (GBS) eigenproblem
//
//   L |beta, delta> = delta |beta, delta>,
//   L = sqrt(1-eta) (mu J+ + nu J-) - sqrt(eta) J0,
//
// on the (M+1)-dimensional Holstein-Primakoff space. The state is written as
// D(zeta) applied to a pre-displacement vector, with zeta chosen so that the
// J- coefficient of D^-1 L D vanishes. The remaining two-term recursion gives
// the spectrum delta_k = A0 (2k - M) / 2 and explicit eigenvectors.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbs/binomial.hpp"
#include "gbs/fock.hpp"
#include "gbs/su2.hpp"

namespace gbs {

template <typename Real = double>
struct GBSParams {
  std::complex<Real> mu{1, 0};
  std::complex<Real> nu{0, 0};
  Real eta = Real(0.5);
  int M = 0;

  void validate() const {
    detail::require_nonneg_order(M);
    auto finite = [](std::complex<Real> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    if (!finite(mu) || !finite(nu)) throw InvalidArgument("gbs: mu and nu must be finite");
    if (mu == std::complex<Real>(0)) throw InvalidArgument("gbs: mu must be nonzero");
    if (!(eta > Real(0) && eta < Real(1)))
      throw InvalidArgument("gbs: eta must satisfy 0 < eta < 1, got " + std::to_string(double(eta)));
  }

  /// Reference magnitude for the branch thresholds.
  Real scale() const { return std::abs(mu) + std::abs(nu) + Real(1); }
};

enum class RootPolicy { Principal, Secondary };

enum class SolutionKind { Generic, DegenerateAPlusZero, DefectiveAZeroZero };

inline std::string_view to_string(RootPolicy policy) {
  return policy == RootPolicy::Principal ? "principal" : "secondary";
}

inline std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::Generic:
      return "generic";
    case SolutionKind::DegenerateAPlusZero:
      return "degenerate-a-plus-zero";
    case SolutionKind::DefectiveAZeroZero:
      return "defective-a-zero-zero";
  }
  return "unknown";
}

inline RootPolicy parse_root_policy(std::string_view s) {
  if (s == "principal") return RootPolicy::Principal;
  if (s == "secondary") return RootPolicy::Secondary;
  throw InvalidArgument("unknown root policy '" + std::string(s) + "' (expected principal|secondary)");
}

/// Coefficients of D^-1 L D = A+ J+ + A- J- - A0 J0.
template <typename Real = double>
struct CoefficientTriple {
  std::complex<Real> a_plus;
  std::complex<Real> a_minus;
  std::complex<Real> a_zero;
};

/// Both roots of mu sqrt(1-eta) D^2 + sqrt(eta) D - sqrt(1-eta) nu = 0.
/// `principal` has the smaller modulus (ties: non-negative real part).
template <typename Real = double>
struct ConstraintRoots {
  std::complex<Real> principal;
  std::complex<Real> secondary;

  std::complex<Real> select(RootPolicy policy) const {
    return policy == RootPolicy::Principal ? principal : secondary;
  }
};

/// A state of the form e^{i n (theta0 - theta_plus)} beta_n^M(eta_prime).
template <typename Real = double>
struct BinomialPhase {
  Real eta_prime;
  Real theta0;
  Real theta_plus;
};

template <typename Real = double>
struct GBSSolution {
  GBSParams<Real> params;
  RootPolicy policy = RootPolicy::Principal;
  std::complex<Real> delta_root;
  DisplacementParams<Real> zeta;
  CoefficientTriple<Real> triple;
  std::vector<std::complex<Real>> eigenvalues;
  /// M+1 states for Generic and DegenerateAPlusZero. A defective operator has
  /// a single Jordan chain, so only its one eigenvector D(zeta)|0> is listed.
  std::vector<StateVector<Real>> eigenstates;
  SolutionKind kind = SolutionKind::Generic;
};

namespace thresholds {
inline constexpr double kAPlusZero = 1e-10;
inline constexpr double kAZeroZero = 1e-12;
}  // namespace thresholds

template <typename Real>
Operator<Real> build_operator(const GBSParams<Real>& p) {
  p.validate();
  const auto j = hp_generators<Real>(p.M);
  return std::sqrt(1 - p.eta) * (p.mu * j.plus + p.nu * j.minus) - std::sqrt(p.eta) * j.zero;
}

template <typename Real>
ConstraintRoots<Real> constraint_roots(const GBSParams<Real>& p) {
  p.validate();
  using C = std::complex<Real>;
  const C a = p.mu * std::sqrt(1 - p.eta);
  const C b = std::sqrt(p.eta);
  const C c = -std::sqrt(1 - p.eta) * p.nu;

  // q = -(b + s)/2 with the sign of s chosen against cancellation; b > 0 so q != 0.
  C s = std::sqrt(b * b - Real(4) * a * c);
  if ((std::conj(b) * s).real() < 0) s = -s;
  const C q = -(b + s) / Real(2);
  C r1 = q / a;
  C r2 = c / q;

  const Real m1 = std::abs(r1), m2 = std::abs(r2);
  const Real tie = Real(1e-12) * std::max({m1, m2, Real(1)});
  bool swap = false;
  if (std::abs(m1 - m2) <= tie)
    swap = r1.real() < 0 && r2.real() >= 0;
  else
    swap = m2 < m1;
  if (swap) std::swap(r1, r2);
  return {r1, r2};
}

template <typename Real>
CoefficientTriple<Real> coefficient_triple(const GBSParams<Real>& p, std::complex<Real> delta) {
  p.validate();
  const auto z = delta_to_zeta(delta, p.M);
  const Real c2 = std::cos(z.r) * std::cos(z.r);
  const Real s2 = std::sin(z.r) * std::sin(z.r);
  const Real sin2r = std::sin(2 * z.r);
  const std::complex<Real> e1 = std::polar(Real(1), z.theta);
  const std::complex<Real> e2 = e1 * e1;
  const Real se = std::sqrt(p.eta), sr = std::sqrt(1 - p.eta);

  CoefficientTriple<Real> t;
  t.a_plus = sr * (p.mu * c2 - p.nu * s2 * e2) - Real(0.5) * se * e1 * sin2r;
  t.a_minus = sr * (p.nu * c2 - p.mu * s2 * std::conj(e2)) - Real(0.5) * se * std::conj(e1) * sin2r;
  t.a_zero = sr * (p.mu * std::conj(e1) + p.nu * e1) * sin2r + se * std::cos(2 * z.r);
  return t;
}

template <typename Real>
SolutionKind classify(const GBSParams<Real>& p, const CoefficientTriple<Real>& t) {
  const Real scale = p.scale();
  if (std::abs(t.a_zero) <= Real(thresholds::kAZeroZero) * scale) return SolutionKind::DefectiveAZeroZero;
  if (std::abs(t.a_plus) <= Real(thresholds::kAPlusZero) * scale) return SolutionKind::DegenerateAPlusZero;
  return SolutionKind::Generic;
}

/// delta_k = A0 (2k - M) / 2 for k = 0..M.
template <typename Real>
std::vector<std::complex<Real>> closed_form_eigenvalues(std::complex<Real> a_zero, int M) {
  detail::require_nonneg_order(M);
  std::vector<std::complex<Real>> out(M + 1);
  for (int k = 0; k <= M; ++k) out[k] = a_zero * Real(2 * k - M) / Real(2);
  return out;
}

template <typename Real>
std::vector<std::complex<Real>> spectrum(const GBSParams<Real>& p, RootPolicy policy = RootPolicy::Principal) {
  const auto delta = constraint_roots(p).select(policy);
  return closed_form_eigenvalues(coefficient_triple(p, delta).a_zero, p.M);
}

/// Pre-displacement eigenvector of A+ J+ - A0 J0 for eigenvalue delta_k:
///   C_n ~ C(k,n) C(M,n)^{-1/2} (A0/A+)^n,  n <= k,
/// built from the two-term recursion
///   C_{n+1} sqrt((n+1)(M-n)) A+ = C_n A0 (k - n)
/// with magnitudes carried in log space. Unit norm, C_0 > 0.
template <typename Real>
StateVector<Real> pre_displacement_sum(const CoefficientTriple<Real>& t, int M, int k) {
  detail::require_nonneg_order(M);
  if (k < 0 || k > M) throw InvalidArgument("eigenstate index k must satisfy 0 <= k <= M");
  if (t.a_plus == std::complex<Real>(0)) throw DomainError("pre_displacement_sum: A+ vanishes");

  StateVector<Real> c = StateVector<Real>::Zero(M + 1);
  if (t.a_zero == std::complex<Real>(0) || k == 0) {
    c(0) = 1;
    return c;
  }
  const std::complex<Real> ratio = t.a_zero / t.a_plus;
  const Real log_ratio = std::log(std::abs(ratio));
  const Real phase_step = std::arg(ratio);

  std::vector<Real> log_mag(k + 1);
  log_mag[0] = 0;
  for (int n = 0; n < k; ++n)
    log_mag[n + 1] = log_mag[n] + log_ratio + std::log(Real(k - n)) -
                     Real(0.5) * (std::log(Real(n + 1)) + std::log(Real(M - n)));
  const Real peak = *std::max_element(log_mag.begin(), log_mag.end());
  for (int n = 0; n <= k; ++n) c(n) = std::polar(std::exp(log_mag[n] - peak), n * phase_step);
  return c / c.norm();
}

/// Same vector from the exponential form exp{(A0/A+) sqrt((k-N+1)/(M-N+1)) J-_k}|0>,
/// where J-_k = a^dagger sqrt(k - N). The exponent is nilpotent on the span of
/// |0>..|k>, so the series is summed exactly.
template <typename Real>
StateVector<Real> pre_displacement_exponential(const CoefficientTriple<Real>& t, int M, int k) {
  detail::require_nonneg_order(M);
  if (k < 0 || k > M) throw InvalidArgument("eigenstate index k must satisfy 0 <= k <= M");
  if (t.a_plus == std::complex<Real>(0)) throw DomainError("pre_displacement_exponential: A+ vanishes");

  const std::complex<Real> ratio = t.a_zero / t.a_plus;
  Operator<Real> x = Operator<Real>::Zero(M + 1, M + 1);
  // sqrt((k-N+1)/(M-N+1)) J-_k |n> = (k-n) sqrt(n+1) / sqrt(M-n) |n+1>
  for (int n = 0; n < k; ++n)
    x(n + 1, n) = ratio * Real(k - n) * std::sqrt(Real(n + 1)) / std::sqrt(Real(M - n));
  const StateVector<Real> c = nilpotent_exp_apply(x, basis_state<Real>(0, M + 1));
  return c / c.norm();
}

namespace detail {

template <typename Real>
struct Reduction {
  std::complex<Real> delta;
  DisplacementParams<Real> zeta;
  CoefficientTriple<Real> triple;
  SolutionKind kind;
};

template <typename Real>
Reduction<Real> reduce(const GBSParams<Real>& p, RootPolicy policy) {
  const auto delta = constraint_roots(p).select(policy);
  const auto triple = coefficient_triple(p, delta);
  return {delta, delta_to_zeta(delta, p.M), triple, classify(p, triple)};
}

template <typename Real>
void require_generic(const Reduction<Real>& red, const char* what) {
  if (red.kind != SolutionKind::Generic)
    throw DomainError(std::string(what) + ": solution kind is " + std::string(to_string(red.kind)) +
                      ", expected generic");
}

template <typename Real>
StateVector<Real> nu_zero_eigenstate_unchecked(std::complex<Real> mu, Real eta, int M, int k) {
  StateVector<Real> c = StateVector<Real>::Zero(M + 1);
  std::vector<Real> log_mag(k + 1);
  const Real log_w = Real(0.5) * (std::log(eta) - std::log1p(-eta)) - std::log(std::abs(mu));
  for (int n = 0; n <= k; ++n)
    log_mag[n] = log_binomial_coefficient<Real>(k, n) - Real(0.5) * log_binomial_coefficient<Real>(M, n) + n * log_w;
  const Real peak = *std::max_element(log_mag.begin(), log_mag.end());
  const Real phase = -std::arg(mu);
  for (int n = 0; n <= k; ++n) c(n) = std::polar(std::exp(log_mag[n] - peak), n * phase);
  return c / c.norm();
}

}  // namespace detail

/// Eigenstate k for nu = 0, where no rotation is needed:
///   sum_{n<=k} C(k,n) C(M,n)^{-1/2} sqrt(eta^n (1-eta)^{k-n}) mu^{-n} |n>.
template <typename Real>
StateVector<Real> nu_zero_eigenstate(std::complex<Real> mu, Real eta, int M, int k) {
  GBSParams<Real>{mu, std::complex<Real>(0), eta, M}.validate();
  if (k < 0 || k > M) throw InvalidArgument("eigenstate index k must satisfy 0 <= k <= M");
  return detail::nu_zero_eigenstate_unchecked(mu, eta, M, k);
}

/// |beta, delta_k> = D(zeta) ||beta, delta_k>> using the finite-sum coefficients.
template <typename Real>
StateVector<Real> eigenstate_sum(const GBSParams<Real>& p, int k, RootPolicy policy = RootPolicy::Principal) {
  const auto red = detail::reduce(p, policy);
  detail::require_generic(red, "eigenstate_sum");
  return canonicalize(displacement(red.zeta) * pre_displacement_sum(red.triple, p.M, k));
}

template <typename Real>
StateVector<Real> eigenstate_exponential(const GBSParams<Real>& p, int k, RootPolicy policy = RootPolicy::Principal) {
  const auto red = detail::reduce(p, policy);
  detail::require_generic(red, "eigenstate_exponential");
  return canonicalize(displacement(red.zeta) * pre_displacement_exponential(red.triple, p.M, k));
}

/// A+ = 0 branch (mu = nu^*): the eigenstates are displaced number states D(zeta)|k>.
template <typename Real>
std::vector<StateVector<Real>> degenerate_eigenstates(const GBSParams<Real>& p,
                                                      RootPolicy policy = RootPolicy::Principal) {
  const auto red = detail::reduce(p, policy);
  if (red.kind != SolutionKind::DegenerateAPlusZero)
    throw DomainError("degenerate_eigenstates: solution kind is " + std::string(to_string(red.kind)) +
                      ", expected degenerate-a-plus-zero");
  const Operator<Real> d = displacement(red.zeta);
  std::vector<StateVector<Real>> out;
  out.reserve(p.M + 1);
  for (int k = 0; k <= p.M; ++k) out.push_back(canonicalize(d.col(k)));
  return out;
}

template <typename Real>
GBSSolution<Real> solve(const GBSParams<Real>& p, RootPolicy policy = RootPolicy::Principal) {
  const auto red = detail::reduce(p, policy);
  GBSSolution<Real> sol;
  sol.params = p;
  sol.policy = policy;
  sol.delta_root = red.delta;
  sol.zeta = red.zeta;
  sol.triple = red.triple;
  sol.kind = red.kind;
  sol.eigenvalues = closed_form_eigenvalues(red.triple.a_zero, p.M);
  sol.eigenstates.reserve(p.M + 1);

  // nu = 0 with the zero root: D(zeta) is the identity.
  if (red.delta == std::complex<Real>(0) && p.nu == std::complex<Real>(0)) {
    for (int k = 0; k <= p.M; ++k) sol.eigenstates.push_back(detail::nu_zero_eigenstate_unchecked(p.mu, p.eta, p.M, k));
    return sol;
  }

  const Operator<Real> d = displacement(red.zeta);
  switch (red.kind) {
    case SolutionKind::Generic:
      for (int k = 0; k <= p.M; ++k)
        sol.eigenstates.push_back(canonicalize(d * pre_displacement_sum(red.triple, p.M, k)));
      break;
    case SolutionKind::DegenerateAPlusZero:
      for (int k = 0; k <= p.M; ++k) sol.eigenstates.push_back(canonicalize(d.col(k)));
      break;
    case SolutionKind::DefectiveAZeroZero:
      sol.eigenstates.push_back(canonicalize(d.col(0)));
      break;
  }
  return sol;
}

/// eta' = |A0|^2 / (|A0|^2 + |A+|^2) and the phases of A0 and A+, describing
/// the k = M pre-displacement vector as a phased binomial state.
template <typename Real>
BinomialPhase<Real> binomial_phase_parameters(const GBSParams<Real>& p, RootPolicy policy = RootPolicy::Principal) {
  const auto red = detail::reduce(p, policy);
  detail::require_generic(red, "binomial_phase_parameters");
  const Real a0 = std::norm(red.triple.a_zero);
  const Real ap = std::norm(red.triple.a_plus);
  return {a0 / (a0 + ap), std::arg(red.triple.a_zero), std::arg(red.triple.a_plus)};
}

/// e^{i n phase} beta_n^M(eta) for n = 0..M.
template <typename Real>
StateVector<Real> phased_binomial(Real eta, Real phase, int M) {
  StateVector<Real> v = binomial_amplitudes(BinomialParams<Real>{eta, M});
  for (int n = 0; n <= M; ++n) v(n) *= std::polar(Real(1), n * phase);
  return v;
}

}  // namespace gbs
