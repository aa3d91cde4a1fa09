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

// Truncated Fock-space kernel. States are column vectors over |0>..|D-1>,
// operators are dense D x D complex matrices. Everything is templated on the
// real scalar type; the unqualified aliases default to double.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "gbs/errors.hpp"

namespace gbs {

template <typename Real = double>
using Complex = std::complex<Real>;

template <typename Real = double>
using StateVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real = double>
using Operator = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Real>
Real pi() {
  using std::acos;
  return acos(Real(-1));
}

inline void require_nonneg_order(int M) {
  if (M < 0) throw InvalidArgument("truncation order M must be >= 0, got " + std::to_string(M));
}

template <typename A, typename B>
void require_same_rows(const A& a, const B& b, const char* what) {
  if (a.rows() != b.rows())
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a.rows()) +
                            " vs " + std::to_string(b.rows()) + ")");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionMismatch(std::string(what) + ": operator is not square (" + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + ")");
}

}  // namespace detail

/// |n> in a D-dimensional truncated space.
template <typename Real = double>
StateVector<Real> basis_state(Eigen::Index n, Eigen::Index dim) {
  if (dim < 1 || n < 0 || n >= dim)
    throw InvalidArgument("basis_state: need 0 <= n < dim, got n=" + std::to_string(n) +
                          " dim=" + std::to_string(dim));
  StateVector<Real> v = StateVector<Real>::Zero(dim);
  v(n) = Real(1);
  return v;
}

/// a on the (M+1)-dimensional space: a|n> = sqrt(n)|n-1>.
template <typename Real = double>
Operator<Real> annihilation_operator(int M) {
  detail::require_nonneg_order(M);
  Operator<Real> a = Operator<Real>::Zero(M + 1, M + 1);
  for (int n = 1; n <= M; ++n) a(n - 1, n) = std::sqrt(Real(n));
  return a;
}

template <typename Real = double>
Operator<Real> creation_operator(int M) {
  return annihilation_operator<Real>(M).adjoint();
}

template <typename Real = double>
Operator<Real> number_operator(int M) {
  detail::require_nonneg_order(M);
  Operator<Real> n = Operator<Real>::Zero(M + 1, M + 1);
  for (int k = 0; k <= M; ++k) n(k, k) = Real(k);
  return n;
}

/// Holstein-Primakoff su(2) generators on the (M+1)-dimensional space:
///   J0 = M/2 - N,  J+ = sqrt(M - N) a,  J- = a^dagger sqrt(M - N).
/// J+ lowers the photon number; (J+)^{M+1} = 0.
template <typename Real = double>
struct HPGenerators {
  Operator<Real> zero;
  Operator<Real> plus;
  Operator<Real> minus;
};

template <typename Real = double>
HPGenerators<Real> hp_generators(int M) {
  using std::sqrt;
  detail::require_nonneg_order(M);
  const Eigen::Index d = M + 1;
  HPGenerators<Real> j{Operator<Real>::Zero(d, d), Operator<Real>::Zero(d, d), Operator<Real>::Zero(d, d)};
  for (int n = 0; n <= M; ++n) j.zero(n, n) = Real(M) / Real(2) - Real(n);
  for (int n = 0; n < M; ++n) j.plus(n, n + 1) = sqrt(Real(n + 1) * Real(M - n));
  j.minus = j.plus.adjoint();
  return j;
}

/// exp(A) by scaling and squaring with a truncated Taylor series. A is scaled
/// by 2^-s until its 1-norm is <= 0.5; the series stops once a term's 1-norm
/// drops below tol times the partial sum's.
template <typename Derived>
Operator<typename Eigen::NumTraits<typename Derived::Scalar>::Real> matrix_exp(
    const Eigen::MatrixBase<Derived>& a,
    typename Eigen::NumTraits<typename Derived::Scalar>::Real tol = 1e-14) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_square(a, "matrix_exp");
  if (!a.allFinite()) throw InvalidArgument("matrix_exp: non-finite entries");
  const Eigen::Index d = a.rows();

  const Real norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  Real scale = 1;
  while (norm1 * scale > Real(0.5)) {
    scale /= 2;
    ++squarings;
  }
  const Operator<Real> scaled = a.template cast<std::complex<Real>>() * scale;

  Operator<Real> result = Operator<Real>::Identity(d, d);
  Operator<Real> term = Operator<Real>::Identity(d, d);
  for (int j = 1; j < 64; ++j) {
    term = (term * scaled) / Real(j);
    result += term;
    const Real term_norm = term.cwiseAbs().colwise().sum().maxCoeff();
    const Real result_norm = result.cwiseAbs().colwise().sum().maxCoeff();
    if (term_norm <= tol * result_norm) break;
  }
  for (int i = 0; i < squarings; ++i) result = (result * result).eval();
  return result;
}

/// exp(X) for nilpotent X as the exact finite sum sum_{j<D} X^j / j!.
template <typename Derived>
Operator<typename Eigen::NumTraits<typename Derived::Scalar>::Real> nilpotent_exp(
    const Eigen::MatrixBase<Derived>& x) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_square(x, "nilpotent_exp");
  const Eigen::Index d = x.rows();
  Operator<Real> result = Operator<Real>::Identity(d, d);
  Operator<Real> term = Operator<Real>::Identity(d, d);
  for (Eigen::Index j = 1; j < d; ++j) {
    term = (term * x) / Real(j);
    result += term;
  }
  return result;
}

/// exp(X) v for nilpotent X without forming the matrix exponential.
template <typename DerivedX, typename DerivedV>
StateVector<typename Eigen::NumTraits<typename DerivedX::Scalar>::Real> nilpotent_exp_apply(
    const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedV>& v) {
  using Real = typename Eigen::NumTraits<typename DerivedX::Scalar>::Real;
  detail::require_square(x, "nilpotent_exp_apply");
  detail::require_same_rows(x, v, "nilpotent_exp_apply");
  StateVector<Real> result = v;
  StateVector<Real> term = v;
  for (Eigen::Index j = 1; j < x.rows(); ++j) {
    term = (x * term) / Real(j);
    result += term;
  }
  return result;
}

/// <u|v>, conjugate-linear in u.
template <typename DerivedU, typename DerivedV>
auto inner(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  detail::require_same_rows(u, v, "inner");
  return u.dot(v);
}

template <typename Derived>
auto norm(const Eigen::MatrixBase<Derived>& u) {
  return u.norm();
}

/// |<u|v>|^2 / (|u|^2 |v|^2).
template <typename DerivedU, typename DerivedV>
auto fidelity(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  using Real = typename Eigen::NumTraits<typename DerivedU::Scalar>::Real;
  detail::require_same_rows(u, v, "fidelity");
  const Real nu = u.squaredNorm();
  const Real nv = v.squaredNorm();
  if (nu == Real(0) || nv == Real(0)) throw InvalidArgument("fidelity: zero vector");
  const Real f = std::norm(u.dot(v)) / (nu * nv);
  return std::min(f, Real(1));
}

template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_square(a, "commutator");
  detail::require_square(b, "commutator");
  detail::require_same_rows(a, b, "commutator");
  using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
  Operator<Real> c = a * b - b * a;
  return c;
}

template <typename DerivedA, typename DerivedV>
auto apply(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedV>& v) {
  detail::require_square(a, "apply");
  detail::require_same_rows(a, v, "apply");
  using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
  StateVector<Real> out = a * v;
  return out;
}

/// Zero-pads v to dim entries (dim >= v.size()).
template <typename Derived>
auto zero_pad(const Eigen::MatrixBase<Derived>& v, Eigen::Index dim) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (dim < v.rows()) throw DimensionMismatch("zero_pad: target dimension smaller than the state");
  StateVector<Real> out = StateVector<Real>::Zero(dim);
  out.head(v.rows()) = v;
  return out;
}

template <typename Derived>
bool is_normalized(const Eigen::MatrixBase<Derived>& v,
                   typename Eigen::NumTraits<typename Derived::Scalar>::Real tol = 1e-12) {
  return v.allFinite() && std::abs(v.norm() - 1) <= tol;
}

/// ||U^dagger U - I||_F <= tol_per_dim * D.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                typename Eigen::NumTraits<typename Derived::Scalar>::Real tol_per_dim = 1e-11) {
  if (u.rows() != u.cols() || !u.allFinite()) return false;
  const auto d = u.rows();
  return (u.adjoint() * u - Operator<typename Eigen::NumTraits<typename Derived::Scalar>::Real>::Identity(d, d))
             .norm() <= tol_per_dim * static_cast<typename Eigen::NumTraits<typename Derived::Scalar>::Real>(d);
}

/// Rescales v to unit norm and rotates its global phase so that the first
/// component of non-negligible magnitude is real and positive.
template <typename Derived>
auto canonicalize(const Eigen::MatrixBase<Derived>& v) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  StateVector<Real> out = v;
  const Real n = out.norm();
  if (!(n > Real(0)) || !std::isfinite(n)) throw InvalidArgument("canonicalize: zero or non-finite state");
  out /= n;
  const Real cutoff = Real(1e-10) * out.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::abs(out(i)) > cutoff) {
      out *= std::conj(out(i)) / std::abs(out(i));
      out(i) = std::abs(out(i));
      break;
    }
  }
  return out;
}

}  // namespace gbs
