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

#include "gbs/app/commands.hpp"

#include <algorithm>
#include <functional>

#include "gbs/app/run_record.hpp"
#include "gbs/app/verification.hpp"
#include "gbs/gbs.hpp"

namespace gbs::app {
namespace {

using C = std::complex<double>;

void write_json(const RunRecord& record, std::ostream& out) { out << record.to_json().dump(2) << "\n"; }

RunRecord make_record(std::string command) {
  RunRecord r;
  r.command = std::move(command);
  r.params = json::object();
  r.results = json::object();
  r.diagnostics = json::object();
  r.tool_version = tool_version();
  return r;
}

/// Maps library exceptions onto exit codes.
int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

void require_format(Format f, std::initializer_list<Format> allowed, const char* command) {
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw InvalidArgument(std::string(command) + ": unsupported output format");
}

json scan_rows_json(const std::vector<ScanRow<double>>& rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back({{"m_or_eta", row.parameter}, {"fidelity", row.fidelity}, {"residual", row.residual}});
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw InvalidArgument("unknown format '" + s + "' (expected json|csv|text)");
}

int cmd_binomial(const BinomialOptions& o, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    require_format(o.format, {Format::Json, Format::Csv}, "binomial");
    const BinomialParams<double> p{o.eta, o.M};
    p.validate();
    const auto amps = binomial_amplitudes(p);
    const auto probs = binomial_distribution(p);
    const auto stats = photon_statistics(amps);
    const bool interior = o.eta > 0 && o.eta < 1;

    if (o.format == Format::Csv) {
      out << "n,amplitude,probability\n";
      for (int n = 0; n <= o.M; ++n)
        out << n << "," << format_real(amps(n).real()) << "," << format_real(probs[n]) << "\n";
      return kExitOk;
    }
    auto record = make_record("binomial");
    record.params = encode(p);
    json amp_list = json::array();
    for (int n = 0; n <= o.M; ++n) amp_list.push_back(amps(n).real());
    record.results = {{"amplitudes", amp_list}, {"distribution", probs}, {"statistics", encode(stats)}};
    record.results["ladder_residual"] = interior ? json(ladder_residual(p)) : json(nullptr);
    record.diagnostics = {{"norm_error", std::abs(amps.norm() - 1)},
                          {"ladder_residual_su2", interior ? json(ladder_residual_su2(p)) : json(nullptr)}};
    write_json(record, out);
    return kExitOk;
  }, err);
}

int cmd_gbs(const GbsOptions& o, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    require_format(o.format, {Format::Json, Format::Csv}, "gbs");
    const GBSParams<double> p{o.mu, o.nu, o.eta, o.M};
    p.validate();
    if (o.k && (*o.k < 0 || *o.k > o.M)) throw InvalidArgument("gbs: k must satisfy 0 <= k <= M");
    const double scale = tolerance_scale_from_env();

    const auto roots = constraint_roots(p);
    const auto sol = solve(p, o.root);
    const auto rep = oracle::compare(p, sol);
    double max_delta = 0;
    for (const auto& d : sol.eigenvalues) max_delta = std::max(max_delta, std::abs(d));
    const double pair_tol = 1e-9 * scale * (1 + max_delta);
    const double residual_tol = 1e-10 * scale * rep.operator_norm;
    const bool pair_ok = rep.multiplicity_collapse || rep.max_pair_error <= pair_tol;
    const bool residual_ok = rep.max_residual <= residual_tol;
    const int code = pair_ok && residual_ok ? kExitOk : kExitVerificationFailed;

    if (o.format == Format::Csv) {
      out << "k,re,im\n";
      for (int k = 0; k <= o.M; ++k)
        out << k << "," << format_real(sol.eigenvalues[k].real()) << "," << format_real(sol.eigenvalues[k].imag()) << "\n";
    } else {
      auto record = make_record("gbs");
      record.params = encode(p);
      record.params["root"] = std::string(to_string(o.root));
      record.params["k"] = o.k ? json(*o.k) : json(nullptr);
      record.results = {
          {"roots", {{"principal", encode(roots.principal)}, {"secondary", encode(roots.secondary)}}},
          {"delta", encode(sol.delta_root)},
          {"zeta", {{"r", sol.zeta.r}, {"theta", sol.zeta.theta}}},
          {"triple", {{"a_plus", encode(sol.triple.a_plus)}, {"a_minus", encode(sol.triple.a_minus)}, {"a_zero", encode(sol.triple.a_zero)}}},
          {"kind", std::string(to_string(sol.kind))},
          {"spectrum", encode(sol.eigenvalues)}};
      json eigenstate = nullptr;
      if (o.k && static_cast<size_t>(*o.k) < sol.eigenstates.size()) eigenstate = encode(sol.eigenstates[*o.k]);
      record.results["eigenstate"] = eigenstate;
      record.diagnostics = {{"oracle",
                             {{"eigenvalues", encode(rep.oracle_eigenvalues)},
                              {"max_pair_error", rep.max_pair_error},
                              {"max_residual", rep.max_residual},
                              {"operator_norm", rep.operator_norm},
                              {"multiplicity_collapse", rep.multiplicity_collapse},
                              {"pair_tolerance", pair_tol},
                              {"residual_tolerance", residual_tol},
                              {"passed", code == kExitOk}}},
                            {"tolerance_scale", scale}};
      if (sol.kind == SolutionKind::DefectiveAZeroZero)
        record.diagnostics["note"] = "A0 = 0: single Jordan chain, only D(zeta)|0> is an eigenvector";
      write_json(record, out);
    }
    if (code != kExitOk)
      err << "verification failure: closed form disagrees with the oracle (pair error " << rep.max_pair_error
          << ", residual " << rep.max_residual << ")\n";
    return code;
  }, err);
}

int cmd_limit(const LimitOptions& o, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    require_format(o.format, {Format::Json, Format::Csv}, "limit");
    std::vector<ScanRow<double>> rows;
    auto record = make_record("limit");
    record.params = {{"mode", o.mode}};

    if (o.mode == "number") {
      GBSParams<double>{o.mu, o.nu, 0.5, o.M}.validate();
      rows = number_limit_scan(o.mu, o.nu, o.M, o.k, o.etas);
      record.params.update({{"mu", encode(o.mu)}, {"nu", encode(o.nu)}, {"M", o.M}, {"k", o.k}, {"etas", o.etas}});
    } else if (o.mode == "squeezed") {
      const LimitSchedule<double> s{o.alpha, o.m_values, {parse_k_rule(o.rule), o.offset}};
      rows = squeezed_limit_scan(o.mu, o.nu, s);
      record.params.update({{"mu", encode(o.mu)}, {"nu", encode(o.nu)}, {"schedule", encode(s)}});
    } else if (o.mode == "coherent") {
      const LimitSchedule<double> s{o.alpha, o.m_values, {parse_k_rule(o.rule), o.offset}};
      rows = coherent_limit_scan(o.phi, s);
      record.params.update({{"phi", o.phi}, {"schedule", encode(s)}});
      record.diagnostics["reference_amplitude"] = encode(coherent_limit_amplitude(o.alpha, o.phi, s.k_rule.kind));
      if (s.k_rule.kind == KRuleKind::Center) {
        const auto v = center_amplitude_verdict(o.phi, s);
        record.diagnostics["amplitude_verdict"] = {{"winner", v.winner},
                                                   {"fidelity_alpha_half", v.fidelity_half},
                                                   {"fidelity_alpha_inv_sqrt2", v.fidelity_inv_sqrt2}};
      }
    } else {
      throw InvalidArgument("limit: unknown mode '" + o.mode + "' (expected number|squeezed|coherent)");
    }

    if (o.format == Format::Csv) {
      out << "m_or_eta,fidelity,residual\n";
      for (const auto& row : rows)
        out << format_real(row.parameter) << "," << format_real(row.fidelity) << "," << format_real(row.residual) << "\n";
    } else {
      record.results = {{"rows", scan_rows_json(rows)}};
      write_json(record, out);
    }
    return kExitOk;
  }, err);
}

int cmd_evolve(const EvolveOptions& o, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    require_format(o.format, {Format::Json, Format::Csv}, "evolve");
    if (!std::isfinite(o.omega) || !std::isfinite(o.t) || !std::isfinite(o.phi))
      throw InvalidArgument("evolve: phi, omega and t must be finite");
    const double scale = tolerance_scale_from_env();
    const auto initial = nu_zero_eigenstate(std::polar(1.0, o.phi), o.eta, o.M, o.k);
    const auto evolved = time_evolve(initial, o.omega, o.t);
    const auto shifted = nu_zero_eigenstate(std::polar(1.0, o.phi + o.omega * o.t), o.eta, o.M, o.k);
    const double f_shift = fidelity(evolved, shifted);
    const double f_initial = fidelity(evolved, initial);
    const int code = 1 - f_shift <= 1e-12 * scale ? kExitOk : kExitVerificationFailed;

    if (o.format == Format::Csv) {
      out << "n,re,im\n";
      for (Eigen::Index n = 0; n < evolved.size(); ++n)
        out << n << "," << format_real(evolved(n).real()) << "," << format_real(evolved(n).imag()) << "\n";
    } else {
      auto record = make_record("evolve");
      record.params = {{"eta", o.eta}, {"M", o.M}, {"k", o.k}, {"phi", o.phi}, {"omega", o.omega}, {"t", o.t}};
      record.results = {{"amplitudes", encode(evolved)},
                        {"fidelity_phase_shifted", f_shift},
                        {"fidelity_initial", f_initial}};
      record.diagnostics = {{"norm_error", std::abs(evolved.norm() - 1)}, {"tolerance_scale", scale}};
      write_json(record, out);
    }
    if (code != kExitOk) err << "verification failure: evolved state differs from the phase-shifted state\n";
    return code;
  }, err);
}

int cmd_verify(const VerifyCommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    require_format(o.format, {Format::Json, Format::Text}, "verify");
    const auto results = run_acceptance({tolerance_scale_from_env(), o.only});
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (o.format == Format::Text) {
      for (const auto& r : results)
        out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "\n      " << r.detail << "\n";
      out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    } else {
      auto record = make_record("verify");
      record.params = {{"only", o.only}, {"tolerance_scale", tolerance_scale_from_env()}};
      json list = json::array();
      for (const auto& r : results)
        list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"metrics", r.metrics}});
      record.results = {{"criteria", list}, {"all_passed", all}};
      write_json(record, out);
    }
    return all ? kExitOk : kExitVerificationFailed;
  }, err);
}

}  // namespace gbs::app
