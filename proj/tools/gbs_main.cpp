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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gbs/app/commands.hpp"
#include "gbs/app/run_record.hpp"

namespace {

struct OutputFlags {
  std::string format;
  std::string out = "-";
};

void add_output_flags(CLI::App* cmd, OutputFlags& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output file, or - for stdout")->capture_default_str();
}

struct ComplexFlags {
  double re = 0;
  double im = 0;
  std::complex<double> value() const { return {re, im}; }
};

void add_complex(CLI::App* cmd, const std::string& name, ComplexFlags& c, double default_re) {
  c.re = default_re;
  cmd->add_option("--" + name + "-re", c.re, "Real part of " + name)->capture_default_str();
  cmd->add_option("--" + name + "-im", c.im, "Imaginary part of " + name)->capture_default_str();
}

/// Runs `body` against a buffer and writes the buffer to the requested sink.
/// Output is only written when the command produced something.
int dispatch(const OutputFlags& o, const std::function<int(std::ostream&)>& body) {
  std::ostringstream buffer;
  const int code = body(buffer);
  const std::string payload = buffer.str();
  if (payload.empty()) return code;
  if (o.out == "-") {
    std::cout << payload << std::flush;
    return code;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << o.out << "'\n";
    return gbs::app::kExitInvalidInput;
  }
  file << payload;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gbs::app;
  CLI::App app{"Generalized binomial states in truncated Fock space"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  // binomial
  auto* binomial = app.add_subcommand("binomial", "Binomial state amplitudes and statistics");
  BinomialOptions bo;
  OutputFlags b_out;
  binomial->add_option("--eta", bo.eta, "Probability eta in [0, 1]")->required();
  binomial->add_option("--M", bo.M, "Maximum photon number")->required();
  add_output_flags(binomial, b_out, "json");

  // gbs
  auto* gbs_cmd = app.add_subcommand("gbs", "Solve the generalized binomial eigenproblem");
  GbsOptions go;
  OutputFlags g_out;
  ComplexFlags g_mu, g_nu;
  std::string g_root = "principal";
  int g_k = -1;
  add_complex(gbs_cmd, "mu", g_mu, 1.0);
  add_complex(gbs_cmd, "nu", g_nu, 0.0);
  gbs_cmd->add_option("--eta", go.eta, "eta in the open interval (0, 1)")->required();
  gbs_cmd->add_option("--M", go.M, "Maximum photon number")->required();
  gbs_cmd->add_option("--root", g_root, "Constraint root")
      ->check(CLI::IsMember({"principal", "secondary"}))
      ->capture_default_str();
  auto* k_opt = gbs_cmd->add_option("--k", g_k, "Emit eigenstate k");
  add_output_flags(gbs_cmd, g_out, "json");

  // limit
  auto* limit = app.add_subcommand("limit", "Limit scans: number, squeezed or coherent");
  LimitOptions lo;
  OutputFlags l_out;
  ComplexFlags l_mu, l_nu;
  limit->add_option("--mode", lo.mode, "number | squeezed | coherent")
      ->required()
      ->check(CLI::IsMember({"number", "squeezed", "coherent"}));
  add_complex(limit, "mu", l_mu, 1.0);
  add_complex(limit, "nu", l_nu, 0.0);
  limit->add_option("--M", lo.M, "Maximum photon number (number mode)")->capture_default_str();
  limit->add_option("--k", lo.k, "Eigenstate index (number mode)")->capture_default_str();
  limit->add_option("--etas", lo.etas, "Comma separated eta schedule (number mode)")->delimiter(',');
  limit->add_option("--alpha", lo.alpha, "Target amplitude")->capture_default_str();
  limit->add_option("--Ms", lo.m_values, "Comma separated M schedule")->delimiter(',');
  limit->add_option("--rule", lo.rule, "k rule: center | top | bottom")
      ->check(CLI::IsMember({"center", "top", "bottom"}))
      ->capture_default_str();
  limit->add_option("--offset", lo.offset, "Offset for the k rule")->capture_default_str();
  limit->add_option("--phi", lo.phi, "Phase of mu (coherent mode)")->capture_default_str();
  add_output_flags(limit, l_out, "csv");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Free evolution of a nu = 0 eigenstate");
  EvolveOptions eo;
  OutputFlags e_out;
  evolve->add_option("--eta", eo.eta, "eta in (0, 1)")->required();
  evolve->add_option("--M", eo.M, "Maximum photon number")->required();
  evolve->add_option("--k", eo.k, "Eigenstate index")->capture_default_str();
  evolve->add_option("--phi", eo.phi, "Initial phase of mu")->capture_default_str();
  evolve->add_option("--omega", eo.omega, "Angular frequency")->capture_default_str();
  evolve->add_option("--t", eo.t, "Time")->capture_default_str();
  add_output_flags(evolve, e_out, "json");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  VerifyCommandOptions vo;
  OutputFlags v_out;
  verify->add_option("--only", vo.only, "Comma separated criterion ids")->delimiter(',');
  add_output_flags(verify, v_out, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (binomial->parsed()) {
      bo.format = parse_format(b_out.format);
      return dispatch(b_out, [&](std::ostream& os) { return cmd_binomial(bo, os, std::cerr); });
    }
    if (gbs_cmd->parsed()) {
      go.mu = g_mu.value();
      go.nu = g_nu.value();
      go.root = gbs::parse_root_policy(g_root);
      if (*k_opt) go.k = g_k;
      go.format = parse_format(g_out.format);
      return dispatch(g_out, [&](std::ostream& os) { return cmd_gbs(go, os, std::cerr); });
    }
    if (limit->parsed()) {
      lo.mu = l_mu.value();
      lo.nu = l_nu.value();
      lo.format = parse_format(l_out.format);
      return dispatch(l_out, [&](std::ostream& os) { return cmd_limit(lo, os, std::cerr); });
    }
    if (evolve->parsed()) {
      eo.format = parse_format(e_out.format);
      return dispatch(e_out, [&](std::ostream& os) { return cmd_evolve(eo, os, std::cerr); });
    }
    if (verify->parsed()) {
      vo.format = parse_format(v_out.format);
      return dispatch(v_out, [&](std::ostream& os) { return cmd_verify(vo, os, std::cerr); });
    }
  } catch (const gbs::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
