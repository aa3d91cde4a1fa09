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

// Reference states, photon statistics, limit scans and free time evolution.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/fock.hpp"
#include "gbs/solver.hpp"
#include "gbs/su2.hpp"

namespace gbs {

/// Tail mass a truncated reference state may drop.
inline constexpr double kReferenceTailBound = 1e-12;

/// max(4 ceil(|alpha|^2) + 60, requested).
template <typename Real>
Eigen::Index reference_dim(Real alpha_magnitude, Eigen::Index requested) {
  const auto base = static_cast<Eigen::Index>(4 * std::ceil(alpha_magnitude * alpha_magnitude) + 60);
  return std::max(base, requested);
}

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n < dim, renormalized.
template <typename Real>
StateVector<Real> coherent_state(std::complex<Real> alpha, Eigen::Index dim) {
  if (dim < 1) throw InvalidArgument("coherent_state: dim must be >= 1");
  const Real mean = std::norm(alpha);
  StateVector<Real> v(dim);
  if (mean == Real(0)) return basis_state<Real>(0, dim);

  const Real log_abs = std::log(std::abs(alpha));
  const Real phase = std::arg(alpha);
  auto log_weight = [&](Eigen::Index n) { return -mean + Real(2 * n) * log_abs - std::lgamma(Real(n + 1)); };
  for (Eigen::Index n = 0; n < dim; ++n) v(n) = std::polar(std::exp(log_weight(n) / 2), Real(n) * phase);

  Real tail = 0;
  const Eigen::Index stop = dim + static_cast<Eigen::Index>(10 * (mean + 10));
  for (Eigen::Index n = dim; n < stop; ++n) tail += std::exp(log_weight(n));
  if (tail > Real(kReferenceTailBound))
    throw InvalidArgument("coherent_state: dim " + std::to_string(dim) + " leaves tail mass " +
                          std::to_string(double(tail)) + " > 1e-12");
  return v / v.norm();
}

/// Normalized solution of mu sqrt(n+1) C_{n+1} = lambda C_n - nu sqrt(n) C_{n-1},
/// i.e. the eigenstate of mu a + nu a^dagger with eigenvalue lambda.
template <typename Real>
StateVector<Real> squeezed_eigenstate(std::complex<Real> mu, std::complex<Real> nu, std::complex<Real> lambda,
                                      Eigen::Index dim) {
  if (dim < 1) throw InvalidArgument("squeezed_eigenstate: dim must be >= 1");
  if (mu == std::complex<Real>(0) || !(std::abs(nu / mu) < Real(1)))
    throw InvalidArgument("squeezed_eigenstate: requires |nu/mu| < 1");

  const Eigen::Index extended = 2 * dim + 60;
  std::vector<std::complex<Real>> c(extended, std::complex<Real>(0));
  c[0] = 1;
  for (Eigen::Index n = 0; n + 1 < extended; ++n) {
    const std::complex<Real> prev = n > 0 ? c[n - 1] : std::complex<Real>(0);
    c[n + 1] = (lambda * c[n] - nu * std::sqrt(Real(n)) * prev) / (mu * std::sqrt(Real(n + 1)));
  }
  Real head = 0, tail = 0;
  for (Eigen::Index n = 0; n < extended; ++n) (n < dim ? head : tail) += std::norm(c[n]);
  if (!std::isfinite(head) || tail > Real(kReferenceTailBound) * (head + tail))
    throw InvalidArgument("squeezed_eigenstate: dim " + std::to_string(dim) + " too small for tail bound 1e-12");

  StateVector<Real> v(dim);
  for (Eigen::Index n = 0; n < dim; ++n) v(n) = c[n];
  return v / v.norm();
}

template <typename Real = double>
struct PhotonStatistics {
  Real mean = 0;
  Real variance = 0;
  /// (variance - mean) / mean; empty when mean <= 1e-14.
  std::optional<Real> mandel_q;
  std::vector<Real> distribution;
};

template <typename Derived>
auto photon_statistics(const Eigen::MatrixBase<Derived>& v) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  PhotonStatistics<Real> s;
  s.distribution.resize(v.size());
  Real second = 0;
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    const Real p = std::norm(v(n));
    s.distribution[n] = p;
    s.mean += Real(n) * p;
    second += Real(n) * Real(n) * p;
  }
  s.variance = second - s.mean * s.mean;
  if (s.mean > Real(1e-14)) s.mandel_q = (s.variance - s.mean) / s.mean;
  return s;
}

/// Free evolution under H = omega (N + 1/2), hbar = 1.
template <typename Derived>
auto time_evolve(const Eigen::MatrixBase<Derived>& v, typename Eigen::NumTraits<typename Derived::Scalar>::Real omega,
                 typename Eigen::NumTraits<typename Derived::Scalar>::Real t) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  StateVector<Real> out = v;
  for (Eigen::Index n = 0; n < out.size(); ++n) out(n) *= std::polar(Real(1), -omega * t * (Real(n) + Real(0.5)));
  return out;
}

/// exp(xi' J+ - xi'^* J-)|0> with xi' = -arctan(sqrt(eta/(1-eta))) e^{i phi}.
template <typename Real>
StateVector<Real> su2_coherent_form(Real eta, Real phi, int M) {
  BinomialParams<Real>{eta, M}.validate_open();
  const Real r = std::atan(std::sqrt(eta / (1 - eta)));
  const auto j = hp_generators<Real>(M);
  const std::complex<Real> xi = -std::polar(r, phi);
  return matrix_exp(Operator<Real>(xi * j.plus - std::conj(xi) * j.minus)).col(0);
}

/// Eigenstate k of the GBS operator without assembling the full solution.
template <typename Real>
StateVector<Real> solve_eigenstate(const GBSParams<Real>& p, int k, RootPolicy policy = RootPolicy::Principal) {
  if (k < 0 || k > p.M) throw InvalidArgument("eigenstate index k must satisfy 0 <= k <= M");
  const auto red = detail::reduce(p, policy);
  if (red.delta == std::complex<Real>(0) && p.nu == std::complex<Real>(0))
    return detail::nu_zero_eigenstate_unchecked(p.mu, p.eta, p.M, k);
  switch (red.kind) {
    case SolutionKind::Generic:
      return canonicalize(displacement(red.zeta) * pre_displacement_sum(red.triple, p.M, k));
    case SolutionKind::DegenerateAPlusZero:
      return canonicalize(displacement(red.zeta).col(k));
    case SolutionKind::DefectiveAZeroZero:
      break;
  }
  throw DomainError("solve_eigenstate: defective operator (A0 = 0) has a single eigenvector");
}

// ---------------------------------------------------------------------------
// Limit scans

enum class KRuleKind { Center, TopOffset, Bottom };

/// Which eigenstate index to follow as M grows.
struct KRule {
  KRuleKind kind = KRuleKind::Center;
  int offset = 0;

  /// Center: floor(M/2) + p; TopOffset: M - p; Bottom: p.
  int index(int M) const {
    int k = 0;
    switch (kind) {
      case KRuleKind::Center:
        k = M / 2 + offset;
        break;
      case KRuleKind::TopOffset:
        k = M - offset;
        break;
      case KRuleKind::Bottom:
        k = offset;
        break;
    }
    if (k < 0 || k > M)
      throw InvalidArgument("k rule gives index " + std::to_string(k) + " outside [0, " + std::to_string(M) + "]");
    return k;
  }
};

inline std::string_view to_string(KRuleKind kind) {
  switch (kind) {
    case KRuleKind::Center:
      return "center";
    case KRuleKind::TopOffset:
      return "top";
    case KRuleKind::Bottom:
      return "bottom";
  }
  return "unknown";
}

inline KRuleKind parse_k_rule(std::string_view s) {
  if (s == "center") return KRuleKind::Center;
  if (s == "top") return KRuleKind::TopOffset;
  if (s == "bottom") return KRuleKind::Bottom;
  throw InvalidArgument("unknown k rule '" + std::string(s) + "' (expected center|top|bottom)");
}

/// M -> infinity, eta = alpha^2 / M -> 0 along m_values.
template <typename Real = double>
struct LimitSchedule {
  Real alpha = 1;
  std::vector<int> m_values;
  KRule k_rule;

  Real eta(int M) const { return alpha * alpha / Real(M); }

  void validate() const {
    if (!(alpha > Real(0)) || !std::isfinite(alpha)) throw InvalidArgument("limit schedule: alpha must be > 0");
    if (m_values.empty()) throw InvalidArgument("limit schedule: no M values");
    for (size_t i = 0; i < m_values.size(); ++i) {
      const int M = m_values[i];
      if (i > 0 && M <= m_values[i - 1]) throw InvalidArgument("limit schedule: M values must be strictly ascending");
      const Real e = eta(M);
      if (!(M > 0 && e > Real(0) && e < Real(1)))
        throw InvalidArgument("limit schedule: eta = alpha^2/M must lie in (0,1), fails at M=" + std::to_string(M));
      k_rule.index(M);
    }
  }
};

template <typename Real = double>
struct ScanRow {
  Real parameter;  // eta for number scans, M for the M -> infinity scans
  Real fidelity;
  Real residual;
};

template <typename Real>
void require_monotone_schedule(const std::vector<Real>& etas) {
  if (etas.empty()) throw InvalidArgument("eta schedule is empty");
  for (size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] > Real(0) && etas[i] < Real(1))) throw InvalidArgument("eta schedule values must lie in (0,1)");
    if (i > 0 && etas[i] <= etas[i - 1]) throw InvalidArgument("eta schedule must be strictly ascending");
  }
}

/// eta -> 1: fidelity of eigenstate k with |k> and ||(N - k) v||.
template <typename Real>
std::vector<ScanRow<Real>> number_limit_scan(std::complex<Real> mu, std::complex<Real> nu, int M, int k,
                                             const std::vector<Real>& etas) {
  require_monotone_schedule(etas);
  if (k < 0 || k > M) throw InvalidArgument("number_limit_scan: need 0 <= k <= M");
  const StateVector<Real> target = basis_state<Real>(k, M + 1);
  const Operator<Real> shifted = number_operator<Real>(M) - Real(k) * Operator<Real>::Identity(M + 1, M + 1);
  std::vector<ScanRow<Real>> rows;
  for (Real eta : etas) {
    const auto v = solve_eigenstate(GBSParams<Real>{mu, nu, eta, M}, k);
    rows.push_back({eta, fidelity(v, target), Real((shifted * v).norm())});
  }
  return rows;
}

/// ||(mu a + nu a^dagger - lambda) v|| with a built at v's dimension.
template <typename Real>
Real ladder_eigen_residual(std::complex<Real> mu, std::complex<Real> nu, std::complex<Real> lambda,
                           const StateVector<Real>& v) {
  const int top = static_cast<int>(v.size()) - 1;
  const Operator<Real> a = annihilation_operator<Real>(top);
  const StateVector<Real> w = mu * (a * v) + nu * (a.adjoint() * v) - lambda * v;
  return w.norm();
}

/// M -> infinity with k = K + p: fidelity against the eigenstate of
/// mu a + nu a^dagger with eigenvalue alpha/2, and that eigen-residual.
template <typename Real>
std::vector<ScanRow<Real>> squeezed_limit_scan(std::complex<Real> mu, std::complex<Real> nu,
                                               const LimitSchedule<Real>& schedule) {
  schedule.validate();
  if (mu == std::complex<Real>(0) || !(std::abs(nu / mu) < Real(1)))
    throw InvalidArgument("squeezed_limit_scan: requires |nu/mu| < 1");
  if (schedule.k_rule.kind != KRuleKind::Center) throw InvalidArgument("squeezed_limit_scan: requires the center k rule");

  const std::complex<Real> lambda = schedule.alpha / Real(2);
  std::vector<ScanRow<Real>> rows;
  for (int M : schedule.m_values) {
    const auto v = solve_eigenstate(GBSParams<Real>{mu, nu, schedule.eta(M), M}, schedule.k_rule.index(M));
    const Eigen::Index dim = reference_dim(schedule.alpha, Eigen::Index(M + 1));
    const auto padded = zero_pad(v, dim);
    const auto reference = squeezed_eigenstate(mu, nu, lambda, dim);
    rows.push_back({Real(M), fidelity(padded, reference), ladder_eigen_residual(mu, nu, lambda, padded)});
  }
  return rows;
}

/// nu = 0, mu = e^{i phi}: the limit state each k rule is expected to reach.
/// Center -> coherent alpha e^{-i phi}/2, TopOffset -> coherent alpha e^{-i phi},
/// Bottom -> vacuum.
template <typename Real>
std::complex<Real> coherent_limit_amplitude(Real alpha, Real phi, KRuleKind rule) {
  switch (rule) {
    case KRuleKind::Center:
      return std::polar(alpha / 2, -phi);
    case KRuleKind::TopOffset:
      return std::polar(alpha, -phi);
    case KRuleKind::Bottom:
      return 0;
  }
  return 0;
}

/// nu = 0 scan: fidelity with the coherent limit of the chosen k rule and the
/// residual ||(a - amplitude) v||.
template <typename Real>
std::vector<ScanRow<Real>> coherent_limit_scan(Real phi, const LimitSchedule<Real>& schedule) {
  schedule.validate();
  const std::complex<Real> mu = std::polar(Real(1), phi);
  const std::complex<Real> amp = coherent_limit_amplitude(schedule.alpha, phi, schedule.k_rule.kind);
  std::vector<ScanRow<Real>> rows;
  for (int M : schedule.m_values) {
    const auto v = nu_zero_eigenstate(mu, schedule.eta(M), M, schedule.k_rule.index(M));
    const Eigen::Index dim = reference_dim(schedule.alpha, Eigen::Index(M + 1));
    const auto padded = zero_pad(v, dim);
    const auto reference = coherent_state(amp, dim);
    rows.push_back({Real(M), fidelity(padded, reference),
                    ladder_eigen_residual(std::complex<Real>(1), std::complex<Real>(0), amp, padded)});
  }
  return rows;
}

/// Center-rule limit for nu = 0 compared against the two candidate coherent
/// amplitudes alpha e^{-i phi}/2 and alpha e^{-i phi}/sqrt(2).
template <typename Real = double>
struct AmplitudeVerdict {
  std::vector<int> m_values;
  std::vector<Real> fidelity_half;
  std::vector<Real> fidelity_inv_sqrt2;
  /// "alpha/2", "alpha/sqrt2", "both" or "neither".
  std::string winner;
};

template <typename Real>
AmplitudeVerdict<Real> center_amplitude_verdict(Real phi, const LimitSchedule<Real>& schedule) {
  schedule.validate();
  if (schedule.k_rule.kind != KRuleKind::Center) throw InvalidArgument("center_amplitude_verdict: requires the center k rule");
  const std::complex<Real> mu = std::polar(Real(1), phi);
  AmplitudeVerdict<Real> out;
  for (int M : schedule.m_values) {
    const auto v = nu_zero_eigenstate(mu, schedule.eta(M), M, schedule.k_rule.index(M));
    const Eigen::Index dim = reference_dim(schedule.alpha, Eigen::Index(M + 1));
    const auto padded = zero_pad(v, dim);
    out.m_values.push_back(M);
    out.fidelity_half.push_back(fidelity(padded, coherent_state(std::polar(schedule.alpha / 2, -phi), dim)));
    out.fidelity_inv_sqrt2.push_back(
        fidelity(padded, coherent_state(std::polar(schedule.alpha / std::numbers::sqrt2_v<Real>, -phi), dim)));
  }
  auto converging = [](const std::vector<Real>& f) {
    for (size_t i = 1; i < f.size(); ++i)
      if (f[i] < f[i - 1]) return false;
    return 1 - f.back() < Real(1e-2);
  };
  const bool half = converging(out.fidelity_half);
  const bool root2 = converging(out.fidelity_inv_sqrt2);
  out.winner = half && root2 ? "both" : half ? "alpha/2" : root2 ? "alpha/sqrt2" : "neither";
  return out;
}

}  // namespace gbs
