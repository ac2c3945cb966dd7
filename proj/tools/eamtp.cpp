// Copyright 2026 The eamtp Authors
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

// eamtp: run protocols, sweeps, decomposition scans and validation suites.
//
// Exit codes: 0 success, 1 invalid input, 2 validation failure, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eamtp/analytics.hpp"
#include "eamtp/error.hpp"
#include "eamtp/io.hpp"
#include "eamtp/mc.hpp"
#include "eamtp/validate.hpp"

namespace {

using eamtp::InvalidInput;
using eamtp::IoError;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct Options {
  // global
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t nodes = 64;
  std::size_t panels = 4;
  std::string measure = "amplitude";
  std::string config;
  // protocol
  std::string protocol;
  double x = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  double phase = 0.0;
  double r = 0.0;
  double q = 0.0;
  // sweep / decomposition
  std::string r_grid = "0:0.05:0.95";
  std::string q_grid = "0:0.05:0.95";
  std::string route = "constructive";
  std::string delta_grid;
  std::size_t delta_steps = 400;
  std::size_t probe_unitaries = 0;
  // validate
  std::string suite;
  std::size_t n = 1000000;
  std::string perturb;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput("config " + path + " is not valid JSON: " + e.what());
  }
  // A run manifest carries its parameters in a nested object.
  if (doc.contains("parameters")) return doc["parameters"];
  return doc;
}

// Fills `value` from the config unless the flag was given explicitly.
template <typename T>
void from_config(const CLI::App& app, const json& cfg, const std::string& key, T& value) {
  const CLI::Option* opt = nullptr;
  for (const CLI::App* a = &app; a != nullptr && opt == nullptr; a = a->get_parent()) {
    try {
      opt = a->get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
    }
  }
  if (opt != nullptr && opt->count() > 0) return;
  if (!cfg.contains(key)) return;
  try {
    value = cfg[key].get<T>();
  } catch (const json::exception&) {
    throw InvalidInput("config key '" + key + "' has the wrong type");
  }
}

eamtp::QuadratureSettings quadrature(const Options& o) {
  eamtp::QuadratureSettings s;
  s.nodes = o.nodes;
  s.panels = o.panels;
  s.measure = eamtp::parse_measure(o.measure);
  if (s.panels == 0 || s.nodes == 0 || s.nodes % s.panels != 0) {
    throw InvalidInput("--nodes must be a positive multiple of --panels");
  }
  return s;
}

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw InvalidInput("--format must be csv or json");
}

json common_parameters(const Options& o) {
  return {{"format", o.format}, {"seed", o.seed},     {"workers", o.workers},
          {"nodes", o.nodes},   {"panels", o.panels}, {"measure", o.measure}};
}

// Writes `body` to --out (or stdout) and, for files, a manifest sidecar.
void emit(const Options& o, const std::string& body, const std::vector<std::string>& argv,
          const json& params) {
  if (o.out == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw IoError("cannot write " + o.out);
    f << body;
    if (!f) throw IoError("write failed for " + o.out);
  }
  eamtp::RunManifest m;
  m.command_line = argv;
  m.parameters = params;
  m.output_sha256[std::filesystem::path(o.out).filename().string()] = eamtp::sha256_file(o.out);
  const std::string manifest = o.out + ".manifest.json";
  std::ofstream f(manifest, std::ios::binary);
  if (!f) throw IoError("cannot write " + manifest);
  f << m.to_json().dump(2) << '\n';
  if (!f) throw IoError("write failed for " + manifest);
}

std::string six(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

int cmd_protocol(const Options& o, const std::vector<std::string>& argv, bool have_amplitudes) {
  check_format(o);
  const eamtp::Protocol p = eamtp::parse_protocol(o.protocol);
  if (!eamtp::has_constructive_pipeline(p)) {
    throw InvalidInput("protocol '" + o.protocol + "' has closed forms only; use sweep");
  }
  eamtp::Complex a;
  eamtp::Complex b;
  if (have_amplitudes) {
    a = o.alpha;
    b = std::polar(o.beta, o.phase);
  } else {
    if (!(o.x >= 0.0 && o.x <= 1.0)) throw InvalidInput("--x must lie in [0, 1]");
    a = std::sqrt(o.x);
    b = std::polar(std::sqrt(1.0 - o.x), o.phase);
  }
  const eamtp::ProtocolReport rep = eamtp::run_protocol(p, a, b, o.r, o.q);
  std::string body;
  if (o.format == "json") {
    body = eamtp::to_json(rep).dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "label,probability,wm_success,fidelity\n";
    for (const auto& br : rep.branches) {
      s << br.label << ',' << eamtp::format_double(br.conditional_probability) << ','
        << eamtp::format_double(br.wm_success) << ',' << eamtp::format_double(br.fidelity) << '\n';
    }
    body = s.str();
  }
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  std::cerr << o.protocol << ": eam " << six(rep.eam_probability) << ", g_tot "
            << six(rep.conditional_success) << ", mean fidelity " << six(rep.mean_fidelity_for_input)
            << '\n';
  json params = common_parameters(o);
  params.update({{"command", "protocol"}, {"protocol", o.protocol}, {"r", o.r}, {"q", o.q},
                 {"phase", o.phase}});
  if (have_amplitudes) {
    params.update({{"alpha", o.alpha}, {"beta", o.beta}});
  } else {
    params["x"] = o.x;
  }
  emit(o, body, argv, params);
  return kExitOk;
}

int cmd_sweep(const Options& o, const std::vector<std::string>& argv) {
  check_format(o);
  const eamtp::Protocol p = eamtp::parse_protocol(o.protocol);
  eamtp::SweepGrid grid{eamtp::parse_grid(o.r_grid), eamtp::parse_grid(o.q_grid)};
  grid.validate();
  eamtp::Route route;
  if (o.route == "constructive") {
    route = eamtp::Route::kConstructive;
  } else if (o.route == "closed-form") {
    route = eamtp::Route::kClosedForm;
  } else {
    throw InvalidInput("--route must be constructive or closed-form");
  }
  const eamtp::SweepResult res = eamtp::sweep(p, grid, quadrature(o), route, o.workers);
  const auto rows = eamtp::sweep_rows(res);
  std::string body;
  if (o.format == "json") {
    body = eamtp::sweep_rows_to_json(rows).dump(2) + "\n";
  } else {
    std::ostringstream s;
    eamtp::write_sweep_csv(s, rows);
    body = s.str();
  }
  std::size_t degenerate = 0;
  for (const auto& row : res.degenerate) {
    for (bool d : row) degenerate += d ? 1 : 0;
  }
  std::cerr << o.protocol << ": " << rows.size() << " cells";
  if (degenerate > 0) std::cerr << ", " << degenerate << " degenerate (NaN)";
  std::cerr << '\n';
  json params = common_parameters(o);
  params.update({{"command", "sweep"}, {"protocol", o.protocol}, {"r-grid", o.r_grid},
                 {"q-grid", o.q_grid}, {"route", o.route}});
  emit(o, body, argv, params);
  return kExitOk;
}

int cmd_decomposition(const Options& o, const std::vector<std::string>& argv) {
  check_format(o);
  const std::vector<double> rs = eamtp::parse_grid(o.r_grid);
  std::vector<double> deltas;
  if (!o.delta_grid.empty()) {
    deltas = eamtp::parse_grid(o.delta_grid);
  } else {
    if (o.delta_steps == 0) throw InvalidInput("--delta-steps must be positive");
    for (std::size_t k = 0; k <= o.delta_steps; ++k) {
      deltas.push_back(2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(o.delta_steps));
    }
  }
  for (double r : rs) {
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidInput("r values must lie in [0, 1]");
  }
  const auto rows = eamtp::decomposition_rows(rs, deltas);
  std::string body;
  if (o.format == "json") {
    json doc = eamtp::decomposition_rows_to_json(rows);
    if (o.probe_unitaries > 0) {
      json probe = json::array();
      for (double r : rs) {
        probe.push_back({{"r", r}, {"max_recoverable_probability",
                                    eamtp::unitary_probe(r, o.probe_unitaries, o.seed)}});
      }
      doc["unitary_probe"] = {{"samples", o.probe_unitaries}, {"seed", o.seed}, {"rows", probe}};
    }
    body = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    eamtp::write_decomposition_csv(s, rows);
    body = s.str();
    if (o.probe_unitaries > 0) {
      for (double r : rs) {
        std::cerr << "unitary probe r=" << six(r) << ": max recoverable "
                  << six(eamtp::unitary_probe(r, o.probe_unitaries, o.seed)) << " vs 1-r "
                  << six(1.0 - r) << '\n';
      }
    }
  }
  json params = common_parameters(o);
  params.update({{"command", "decomposition"}, {"r-grid", o.r_grid},
                 {"delta-grid", o.delta_grid}, {"delta-steps", o.delta_steps},
                 {"probe-unitaries", o.probe_unitaries}});
  emit(o, body, argv, params);
  return kExitOk;
}

int cmd_validate(const Options& o, const std::vector<std::string>& argv) {
  eamtp::ValidationReport rep;
  if (o.suite == "analytic") {
    eamtp::AnalyticOptions opt;
    opt.quadrature = quadrature(o);
    if (!o.perturb.empty()) opt.perturbed = eamtp::parse_quantity(o.perturb);
    rep = eamtp::validate_analytic(opt);
  } else if (o.suite == "mc") {
    eamtp::McOptions opt;
    opt.seed = o.seed;
    opt.n_trajectories = o.n;
    opt.workers = o.workers;
    opt.measure = eamtp::parse_measure(o.measure);
    if (opt.n_trajectories < 2) throw InvalidInput("--n must be at least 2");
    rep = eamtp::validate_mc(opt);
  } else {
    throw InvalidInput("suite must be analytic or mc");
  }
  for (const auto& c : rep.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << "  deviation " << six(c.deviation)
              << " (tolerance " << six(c.tolerance) << ")";
    if (!c.passed && !c.detail.empty()) std::cerr << " at " << c.detail;
    std::cerr << '\n';
  }
  json params = common_parameters(o);
  params.update({{"command", "validate"}, {"suite", o.suite}, {"n", o.n}});
  emit(o, rep.to_json().dump(2) + "\n", argv, params);
  return rep.passed() ? kExitOk : kExitValidation;
}

int run(int argc, char** argv) {
  CLI::App app{"Teleportation through amplitude-damping channels with EAM and weak measurement"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "output path, '-' for stdout");
  app.add_option("--format", o.format, "csv or json");
  app.add_option("--seed", o.seed, "RNG seed");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_option("--nodes", o.nodes, "quadrature nodes");
  app.add_option("--panels", o.panels, "quadrature panels");
  app.add_option("--measure", o.measure, "input average: amplitude or population");
  app.add_option("--config", o.config, "JSON config or run manifest; flags take precedence");
  app.set_version_flag("--version", std::string(eamtp::kToolVersion));

  auto* protocol = app.add_subcommand("protocol", "run one protocol on one input state");
  protocol->add_option("protocol", o.protocol, "protocol id");
  protocol->add_option("--x", o.x, "input population |alpha|^2");
  auto* alpha_opt = protocol->add_option("--alpha", o.alpha, "|alpha| (with --beta)");
  auto* beta_opt = protocol->add_option("--beta", o.beta, "|beta| (with --alpha)");
  protocol->add_option("--phase", o.phase, "relative phase of beta");
  protocol->add_option("--r", o.r, "decay probability");
  protocol->add_option("--q", o.q, "weak-measurement strength");

  auto* sweep = app.add_subcommand("sweep", "average fidelity and success over an (r, q) grid");
  sweep->add_option("protocol", o.protocol, "protocol id");
  sweep->add_option("--r-grid", o.r_grid, "start:step:stop or a,b,c");
  sweep->add_option("--q-grid", o.q_grid, "start:step:stop or a,b,c");
  sweep->add_option("--route", o.route, "constructive or closed-form");

  auto* decomp = app.add_subcommand("decomposition", "recoverable probability per Kraus rotation");
  decomp->add_option("--r-grid", o.r_grid, "start:step:stop or a,b,c");
  decomp->add_option("--delta-grid", o.delta_grid, "explicit delta grid");
  decomp->add_option("--delta-steps", o.delta_steps, "uniform steps over [0, 2 pi]");
  decomp->add_option("--probe-unitaries", o.probe_unitaries, "random U(2) mixings per r");

  auto* validate = app.add_subcommand("validate", "run a validation suite");
  validate->add_option("suite", o.suite, "analytic or mc")->required();
  validate->add_option("--n", o.n, "trajectories per configuration");
  validate->add_option("--perturb-formula", o.perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    json cfg = json::object();
    if (!o.config.empty()) cfg = load_config(o.config);
    const CLI::App* sub = app.get_subcommands().front();
    if (cfg.contains("command") && cfg["command"] != sub->get_name()) {
      throw InvalidInput("config was written by '" + cfg["command"].get<std::string>() +
                         "', not '" + sub->get_name() + "'");
    }
    from_config(*sub, cfg, "format", o.format);
    from_config(*sub, cfg, "measure", o.measure);
    from_config(*sub, cfg, "seed", o.seed);
    from_config(*sub, cfg, "workers", o.workers);
    from_config(*sub, cfg, "nodes", o.nodes);
    from_config(*sub, cfg, "panels", o.panels);
    if (sub == protocol || sub == sweep) {
      if (o.protocol.empty() && cfg.contains("protocol")) o.protocol = cfg["protocol"];
      if (o.protocol.empty()) throw InvalidInput("a protocol id is required");
    }
    if (sub == protocol) {
      from_config(*sub, cfg, "x", o.x);
      from_config(*sub, cfg, "alpha", o.alpha);
      from_config(*sub, cfg, "beta", o.beta);
      from_config(*sub, cfg, "phase", o.phase);
      from_config(*sub, cfg, "r", o.r);
      from_config(*sub, cfg, "q", o.q);
      const bool cli_amp = alpha_opt->count() > 0 || beta_opt->count() > 0;
      const bool cfg_amp = !cli_amp && protocol->get_option("--x")->count() == 0 &&
                           cfg.contains("alpha");
      if (cli_amp && (alpha_opt->count() == 0 || beta_opt->count() == 0)) {
        throw InvalidInput("--alpha and --beta must be given together");
      }
      if (cli_amp && protocol->get_option("--x")->count() > 0) {
        throw InvalidInput("give either --x or --alpha/--beta");
      }
      return cmd_protocol(o, args, cli_amp || cfg_amp);
    }
    if (sub == sweep) {
      from_config(*sub, cfg, "r-grid", o.r_grid);
      from_config(*sub, cfg, "q-grid", o.q_grid);
      from_config(*sub, cfg, "route", o.route);
      return cmd_sweep(o, args);
    }
    if (sub == decomp) {
      from_config(*sub, cfg, "r-grid", o.r_grid);
      from_config(*sub, cfg, "delta-grid", o.delta_grid);
      from_config(*sub, cfg, "delta-steps", o.delta_steps);
      from_config(*sub, cfg, "probe-unitaries", o.probe_unitaries);
      return cmd_decomposition(o, args);
    }
    from_config(*sub, cfg, "n", o.n);
    return cmd_validate(o, args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eamtp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
