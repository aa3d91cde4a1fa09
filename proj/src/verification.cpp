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

#include "gbs/app/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "gbs/gbs.hpp"

namespace gbs::app {
namespace {

using json = nlohmann::json;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

/// Random GBS parameters: |mu|, |nu| <= 2 with uniform phases, eta in (0.05, 0.95), 1 <= M <= 12.
std::vector<GBSParams<double>> random_draws(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> order(1, 12);
  std::vector<GBSParams<double>> out;
  for (int i = 0; i < count; ++i) {
    GBSParams<double> p;
    p.mu = std::polar(2.0 * (1.0 - unit(rng)), 2 * kPi * unit(rng));
    p.nu = std::polar(2.0 * unit(rng), 2 * kPi * unit(rng));
    p.eta = 0.05 + 0.9 * unit(rng);
    while (p.eta <= 0.05) p.eta = 0.05 + 0.9 * unit(rng);
    p.M = order(rng);
    out.push_back(p);
  }
  return out;
}

/// C(M,n) eta^n (1-eta)^(M-n) from an exact integer binomial in long double.
double binomial_pmf_reference(int M, int n, double eta) {
  long double c = 1;
  for (int j = 1; j <= n; ++j) c = c * (M - n + j) / j;
  return static_cast<double>(c * std::pow(static_cast<long double>(eta), n) *
                             std::pow(1.0L - static_cast<long double>(eta), M - n));
}

CriterionResult binomial_core(double scale) {
  CriterionResult r{1, "Binomial core (distribution, ladder residual, displacement form)"};
  double dist_err = 0, ladder = 0, disp = 0;
  for (int e = 1; e <= 9; ++e) {
    const double eta = e / 10.0;
    for (int M = 1; M <= 60; ++M) {
      const BinomialParams<double> p{eta, M};
      const auto probs = binomial_distribution(p);
      const auto amps = binomial_amplitudes(p);
      for (int n = 0; n <= M; ++n) {
        dist_err = std::max(dist_err, std::abs(probs[n] - binomial_pmf_reference(M, n, eta)));
        dist_err = std::max(dist_err, std::abs(std::norm(amps(n)) - binomial_pmf_reference(M, n, eta)));
      }
      ladder = std::max(ladder, ladder_residual(p));
      disp = std::max(disp, 1 - fidelity(binomial_displacement_form(p), amps));
    }
  }
  r.passed = dist_err <= 1e-14 * scale && ladder <= 1e-12 * scale && disp <= 1e-12 * scale;
  r.detail = "max |P_n - ref| = " + sci(dist_err) + " (<= 1e-14), max ladder residual = " + sci(ladder) +
             " (<= 1e-12), max 1-F(displacement form) = " + sci(disp) + " (<= 1e-12)";
  r.metrics = {{"max_distribution_error", dist_err}, {"max_ladder_residual", ladder}, {"max_displacement_infidelity", disp}};
  return r;
}

struct DrawStats {
  double pair = 0;      // max pair error / (1 + max|delta|)
  double residual = 0;  // max residual / ||L||_F
  double forms = 0;     // max 1 - F(sum, exponential)
  int non_generic = 0;
};

DrawStats random_draw_stats(bool with_forms) {
  DrawStats s;
  for (const auto& p : random_draws(200, 20260518)) {
    const auto sol = solve(p);
    if (sol.kind != SolutionKind::Generic) ++s.non_generic;
    const auto rep = oracle::compare(p, sol);
    double max_delta = 0;
    for (const auto& d : sol.eigenvalues) max_delta = std::max(max_delta, std::abs(d));
    s.pair = std::max(s.pair, rep.max_pair_error / (1 + max_delta));
    s.residual = std::max(s.residual, rep.max_residual / rep.operator_norm);
    if (with_forms && sol.kind == SolutionKind::Generic)
      for (int k = 0; k <= p.M; ++k)
        s.forms = std::max(s.forms, 1 - fidelity(eigenstate_sum(p, k), eigenstate_exponential(p, k)));
  }
  return s;
}

CriterionResult spectrum_oracle(double scale) {
  CriterionResult r{2, "Closed-form spectrum vs independent QR eigensolver (200 random draws)"};
  const auto s = random_draw_stats(false);
  r.passed = s.pair <= 1e-9 * scale && s.residual <= 1e-10 * scale && s.non_generic == 0;
  r.detail = "max pair error/(1+max|delta|) = " + sci(s.pair) + " (<= 1e-9), max residual/||L||_F = " +
             sci(s.residual) + " (<= 1e-10), non-generic draws = " + std::to_string(s.non_generic);
  r.metrics = {{"max_relative_pair_error", s.pair}, {"max_relative_residual", s.residual}, {"non_generic", s.non_generic}};
  return r;
}

CriterionResult form_equivalence(double scale) {
  CriterionResult r{3, "Finite-sum vs exponential eigenstate forms (same 200 draws, all k)"};
  const auto s = random_draw_stats(true);
  r.passed = s.forms <= 1e-11 * scale;
  r.detail = "max 1-F(sum, exponential) = " + sci(s.forms) + " (<= 1e-11)";
  r.metrics = {{"max_infidelity", s.forms}};
  return r;
}

CriterionResult degenerate_branch(double scale) {
  CriterionResult r{4, "Hermitian mu = nu* branch (50 random draws)"};
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> order(1, 12);
  int wrong_kind = 0;
  double imag = 0, ortho = 0, residual = 0;
  for (int i = 0; i < 50; ++i) {
    const C mu = std::polar(2.0 * (1.0 - unit(rng)), 2 * kPi * unit(rng));
    const GBSParams<double> p{mu, std::conj(mu), 0.05 + 0.9 * unit(rng), order(rng)};
    const auto sol = solve(p);
    if (sol.kind != SolutionKind::DegenerateAPlusZero) {
      ++wrong_kind;
      continue;
    }
    for (const auto& d : sol.eigenvalues) imag = std::max(imag, std::abs(d.imag()));
    Operator<double> basis(p.M + 1, p.M + 1);
    for (int k = 0; k <= p.M; ++k) basis.col(k) = sol.eigenstates[k];
    ortho = std::max(ortho, (basis.adjoint() * basis - Operator<double>::Identity(p.M + 1, p.M + 1)).cwiseAbs().maxCoeff());
    const auto rep = oracle::compare(p, sol);
    residual = std::max(residual, rep.max_residual / rep.operator_norm);
  }
  r.passed = wrong_kind == 0 && imag <= 1e-10 * scale && ortho <= 1e-10 * scale && residual <= 1e-10 * scale;
  r.detail = "wrong kind = " + std::to_string(wrong_kind) + ", max |Im delta| = " + sci(imag) +
             " (<= 1e-10), max |<v_i|v_j> - delta_ij| = " + sci(ortho) + " (<= 1e-10), max residual/||L||_F = " +
             sci(residual) + " (<= 1e-10)";
  r.metrics = {{"wrong_kind", wrong_kind}, {"max_imag", imag}, {"max_orthonormality_error", ortho}, {"max_relative_residual", residual}};
  return r;
}

CriterionResult number_limit(double scale) {
  CriterionResult r{5, "Number-state limit eta -> 1 (mu=1, nu in {0, 0.4}, M=6, all k)"};
  const std::vector<double> etas{0.9, 0.99, 0.999, 0.9999, 1 - 1e-6};
  bool monotone = true;
  double worst_final = 1;
  for (double nu : {0.0, 0.4}) {
    for (int k = 0; k <= 6; ++k) {
      const auto rows = number_limit_scan<double>(C(1), C(nu), 6, k, etas);
      for (size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].fidelity >= rows[i - 1].fidelity;
      worst_final = std::min(worst_final, rows.back().fidelity);
    }
  }
  r.passed = monotone && 1 - worst_final <= 1e-4 * scale;
  r.detail = std::string("monotone = ") + (monotone ? "yes" : "no") + ", min fidelity at eta=1-1e-6 = " +
             std::to_string(worst_final) + " (>= 0.9999)";
  r.metrics = {{"monotone", monotone}, {"min_final_fidelity", worst_final}};
  return r;
}

CriterionResult coherent_limit(double scale) {
  CriterionResult r{6, "Coherent limit (nu=0, mu=1, k=M, alpha=1, eta=1/M)"};
  const LimitSchedule<double> schedule{1.0, {50, 100, 200, 400}, {KRuleKind::TopOffset, 0}};
  const auto rows = coherent_limit_scan(0.0, schedule);
  bool increasing = true;
  for (size_t i = 1; i < rows.size(); ++i) increasing = increasing && rows[i].fidelity > rows[i - 1].fidelity;
  r.passed = increasing && 1 - rows.back().fidelity <= 1e-3 * scale;
  std::ostringstream os;
  os.precision(9);
  os << "fidelity vs |alpha=1>:";
  json f = json::array();
  for (const auto& row : rows) {
    os << " M=" << row.parameter << ":" << row.fidelity;
    f.push_back(row.fidelity);
  }
  os << (increasing ? " (increasing)" : " (NOT increasing)") << ", final >= 0.999";
  r.detail = os.str();
  r.metrics = {{"fidelities", f}, {"increasing", increasing}};
  return r;
}

CriterionResult squeezed_limit(double scale) {
  CriterionResult r{7, "Squeezed limit (mu=1, nu=0.3, alpha=1, center rule) + alpha/2 vs alpha/sqrt2 verdict"};
  const LimitSchedule<double> schedule{1.0, {50, 100, 200}, {KRuleKind::Center, 0}};
  const auto rows = squeezed_limit_scan<double>(C(1), C(0.3), schedule);
  bool decreasing = true;
  for (size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i].residual < rows[i - 1].residual;
  const double final_fid = rows.back().fidelity;

  const auto verdict = center_amplitude_verdict(0.0, schedule);
  r.passed = decreasing && 1 - final_fid <= 1e-2 * scale;
  std::ostringstream os;
  os.precision(6);
  os << "residuals:";
  json res = json::array(), fid = json::array();
  for (const auto& row : rows) {
    os << " " << sci(row.residual);
    res.push_back(row.residual);
    fid.push_back(row.fidelity);
  }
  os << (decreasing ? " (strictly decreasing)" : " (NOT decreasing)") << ", fidelity at M=200 = " << final_fid
     << " (>= 0.99); center-limit amplitude verdict (nu=0): " << verdict.winner
     << " [F(alpha/2)=" << verdict.fidelity_half.back() << ", F(alpha/sqrt2)=" << verdict.fidelity_inv_sqrt2.back()
     << " at M=" << verdict.m_values.back() << "]";
  r.detail = os.str();
  r.metrics = {{"residuals", res},
               {"fidelities", fid},
               {"verdict", {{"winner", verdict.winner},
                            {"m_values", verdict.m_values},
                            {"fidelity_alpha_half", verdict.fidelity_half},
                            {"fidelity_alpha_inv_sqrt2", verdict.fidelity_inv_sqrt2}}}};
  return r;
}

CriterionResult disentangling(double scale) {
  CriterionResult r{8, "Disentangling theorem (M <= 20, 50 random xi per M, |xi| <= 1.4)"};
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int M = 0; M <= 20; ++M) {
    for (int i = 0; i < 50; ++i) {
      const C xi = std::polar(1.4 * unit(rng), 2 * kPi * unit(rng));
      const auto product = disentangled_displacement(xi, M);
      const auto direct = displacement(DisplacementParams<double>::from_zeta(xi, M));
      worst = std::max(worst, (product - direct).norm());
    }
  }
  r.passed = worst <= 1e-10 * scale;
  r.detail = "max ||product - exp||_F = " + sci(worst) + " (<= 1e-10)";
  r.metrics = {{"max_frobenius_error", worst}};
  return r;
}

CriterionResult time_evolution(double scale) {
  CriterionResult r{9, "Time evolution as a phase shift (eta=0.3, M=8, k in {0,4,8}, 20 random pairs)"};
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double phi = 2 * kPi * unit(rng) - kPi;
    const double omega_t = 4 * kPi * unit(rng) - 2 * kPi;
    const auto before = solve(GBSParams<double>{std::polar(1.0, phi), C(0), 0.3, 8});
    const auto after = solve(GBSParams<double>{std::polar(1.0, phi + omega_t), C(0), 0.3, 8});
    for (int k : {0, 4, 8})
      worst = std::max(worst, 1 - fidelity(time_evolve(before.eigenstates[k], 1.0, omega_t), after.eigenstates[k]));
  }
  r.passed = worst <= 1e-12 * scale;
  r.detail = "max 1-F(U(t) state(phi), state(phi+omega t)) = " + sci(worst) + " (<= 1e-12)";
  r.metrics = {{"max_infidelity", worst}};
  return r;
}

CriterionResult algebra_and_unitarity(double scale) {
  CriterionResult r{10, "su(2) commutators and D(zeta) unitarity (M <= 40)"};
  double comm = 0, unit_err = 0;
  const std::vector<double> radii{0.0, 0.3, 0.7, 1.1, 1.5, kPi / 2 - 1e-3};
  const std::vector<double> phases{0.0, 1.0, -2.5, kPi};
  for (int M = 0; M <= 40; ++M) {
    const auto j = hp_generators<double>(M);
    comm = std::max(comm, (commutator(j.zero, j.plus) - j.plus).norm());
    comm = std::max(comm, (commutator(j.zero, j.minus) + j.minus).norm());
    comm = std::max(comm, (commutator(j.plus, j.minus) - 2.0 * j.zero).norm());
    for (double rad : radii) {
      for (double th : phases) {
        const auto d = displacement(DisplacementParams<double>{rad, th, M});
        unit_err = std::max(unit_err, (d.adjoint() * d - Operator<double>::Identity(M + 1, M + 1)).norm());
      }
    }
  }
  r.passed = comm <= 1e-12 * scale && unit_err <= 1e-11 * scale;
  r.detail = "max commutator error = " + sci(comm) + " (<= 1e-12), max ||D^dagger D - I||_F = " + sci(unit_err) +
             " (<= 1e-11)";
  r.metrics = {{"max_commutator_error", comm}, {"max_unitarity_error", unit_err}};
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  using Runner = std::function<CriterionResult(double)>;
  const std::vector<std::pair<int, Runner>> all{
      {1, binomial_core},   {2, spectrum_oracle}, {3, form_equivalence}, {4, degenerate_branch},
      {5, number_limit},    {6, coherent_limit},  {7, squeezed_limit},   {8, disentangling},
      {9, time_evolution},  {10, algebra_and_unitarity}};
  std::vector<CriterionResult> out;
  for (const auto& [id, run] : all) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    try {
      out.push_back(run(options.tolerance_scale));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), nullptr});
    }
  }
  return out;
}

double tolerance_scale_from_env() {
  const char* raw = std::getenv("GBS_TOLERANCE_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0)
    throw InvalidArgument(std::string("GBS_TOLERANCE_OVERRIDE must be a positive number, got '") + raw + "'");
  return v;
}

}  // namespace gbs::app
