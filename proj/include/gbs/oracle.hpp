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

// Independent verification path: a general dense eigensolver, inverse
// iteration for eigenvectors and closed-form-vs-oracle spectrum reports.
// Nothing here calls into the closed-form solver except compare(), which
// only reads a finished solution.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "gbs/fock.hpp"
#include "gbs/solver.hpp"

namespace gbs::oracle {

/// All eigenvalues of a square matrix with algebraic multiplicity, from a
/// Hessenberg reduction followed by shifted complex QR (Schur) iteration.
template <typename Derived>
std::vector<std::complex<typename Eigen::NumTraits<typename Derived::Scalar>::Real>> dense_spectrum(
    const Eigen::MatrixBase<Derived>& l) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_square(l, "dense_spectrum");
  if (!l.allFinite()) throw InvalidArgument("dense_spectrum: non-finite entries");
  const Operator<Real> a = l.template cast<std::complex<Real>>();
  Eigen::ComplexEigenSolver<Operator<Real>> solver;
  solver.setMaxIterations(100 * std::max<Eigen::Index>(a.rows(), 1));
  solver.compute(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("dense_spectrum: QR iteration did not converge within 100*D sweeps");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Unit vector v with (L - lambda) v ~ 0 by shifted inverse iteration.
/// Throws ConvergenceError if the residual does not reach 1e-9 ||L||_F.
template <typename Derived>
StateVector<typename Eigen::NumTraits<typename Derived::Scalar>::Real> null_eigenvector(
    const Eigen::MatrixBase<Derived>& l, std::complex<typename Eigen::NumTraits<typename Derived::Scalar>::Real> lambda,
    int iterations = 3) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  detail::require_square(l, "null_eigenvector");
  const Eigen::Index d = l.rows();
  const Operator<Real> a = l.template cast<C>();
  const Real lnorm = a.norm();
  const Real scale = std::max(lnorm, Real(1));

  const C shift = lambda + C(Real(1e-12) * scale, Real(1e-12) * scale);
  Eigen::PartialPivLU<Operator<Real>> lu(a - shift * Operator<Real>::Identity(d, d));

  std::mt19937_64 rng(0x5eed0fULL);
  std::normal_distribution<double> gauss;
  StateVector<Real> v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = C(Real(gauss(rng)), Real(gauss(rng)));
  v /= v.norm();

  for (int it = 0; it < iterations; ++it) {
    StateVector<Real> w = lu.solve(v);
    const Real wn = w.norm();
    if (!std::isfinite(wn) || wn == Real(0)) break;
    v = w / wn;
  }
  const Real residual = (a * v - lambda * v).norm();
  if (!(residual <= Real(1e-9) * std::max(lnorm, Real(1e-300))) && residual != Real(0))
    throw ConvergenceError("null_eigenvector: residual " + std::to_string(double(residual)) +
                           " above 1e-9 ||L||_F; shift too far from the spectrum");
  return canonicalize(v);
}

template <typename Real = double>
struct SpectrumReport {
  std::vector<std::complex<Real>> oracle_eigenvalues;
  std::vector<std::complex<Real>> closed_form_eigenvalues;
  /// (oracle index, closed-form index)
  std::vector<std::pair<int, int>> pairing;
  Real max_pair_error = 0;
  /// max_k ||L v_k - delta_k v_k||; for a defective solution only the listed
  /// eigenvector contributes.
  Real max_residual = 0;
  Real operator_norm = 0;
  /// Set for a defective (A0 = 0) solution: every closed-form eigenvalue is 0
  /// and the oracle spectrum is a perturbed Jordan block, so the pairing
  /// error is not meaningful.
  bool multiplicity_collapse = false;
};

/// Greedy nearest-neighbour pairing of two eigenvalue lists, both visited in
/// order of increasing real part.
template <typename Real>
std::pair<std::vector<std::pair<int, int>>, Real> pair_spectra(const std::vector<std::complex<Real>>& oracle,
                                                               const std::vector<std::complex<Real>>& closed) {
  if (oracle.size() != closed.size())
    throw DimensionMismatch("pair_spectra: " + std::to_string(oracle.size()) + " oracle vs " +
                            std::to_string(closed.size()) + " closed-form eigenvalues");
  auto by_real = [](const std::vector<std::complex<Real>>& v) {
    std::vector<int> idx(v.size());
    for (size_t i = 0; i < v.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return v[a].real() < v[b].real() || (v[a].real() == v[b].real() && v[a].imag() < v[b].imag());
    });
    return idx;
  };
  const auto oi = by_real(oracle);
  const auto ci = by_real(closed);
  std::vector<bool> used(oracle.size(), false);
  std::vector<std::pair<int, int>> pairs;
  Real worst = 0;
  for (int c : ci) {
    int best = -1;
    Real best_err = 0;
    for (int o : oi) {
      if (used[o]) continue;
      const Real err = std::abs(oracle[o] - closed[c]);
      if (best < 0 || err < best_err) {
        best = o;
        best_err = err;
      }
    }
    used[best] = true;
    pairs.emplace_back(best, c);
    worst = std::max(worst, best_err);
  }
  return {pairs, worst};
}

template <typename Real>
SpectrumReport<Real> compare(const GBSParams<Real>& p, const GBSSolution<Real>& sol) {
  const Operator<Real> l = build_operator(p);
  if (static_cast<Eigen::Index>(sol.eigenvalues.size()) != l.rows())
    throw DimensionMismatch("compare: solution has " + std::to_string(sol.eigenvalues.size()) +
                            " eigenvalues for a " + std::to_string(l.rows()) + "-dimensional operator");
  SpectrumReport<Real> rep;
  rep.operator_norm = l.norm();
  rep.oracle_eigenvalues = dense_spectrum(l);
  rep.closed_form_eigenvalues = sol.eigenvalues;
  auto [pairs, worst] = pair_spectra(rep.oracle_eigenvalues, rep.closed_form_eigenvalues);
  rep.pairing = std::move(pairs);
  rep.max_pair_error = worst;
  rep.multiplicity_collapse = sol.kind == SolutionKind::DefectiveAZeroZero;

  for (size_t k = 0; k < sol.eigenstates.size(); ++k) {
    const auto& v = sol.eigenstates[k];
    const std::complex<Real> delta = rep.multiplicity_collapse ? std::complex<Real>(0) : sol.eigenvalues[k];
    rep.max_residual = std::max(rep.max_residual, Real((l * v - delta * v).norm()));
  }
  return rep;
}

}  // namespace gbs::oracle
