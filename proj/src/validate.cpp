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

#include "eamtp/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eamtp/channels.hpp"
#include "eamtp/mc.hpp"
#include "eamtp/states.hpp"

namespace eamtp {
namespace {

// Accumulates the worst deviation of one named check. NaN deviations fail.
class Tracker {
 public:
  Tracker(std::string name, double tolerance) : name_(std::move(name)), tol_(tolerance) {}

  void add(double deviation, const std::string& where = {}) {
    if (std::isnan(deviation)) {
      nan_ = true;
      if (where_.empty()) where_ = where;
      return;
    }
    if (deviation > worst_) {
      worst_ = deviation;
      if (deviation > tol_) where_ = where;
    }
  }

  void diff(double got, double want, const std::string& where = {}) {
    if (std::isnan(got) && std::isnan(want)) return;
    add(std::abs(got - want), where);
  }

  Check finish() const {
    Check c{name_, !nan_ && worst_ <= tol_, worst_, tol_, where_};
    if (nan_) c.deviation = std::nan("");
    return c;
  }

 private:
  std::string name_;
  double tol_;
  double worst_ = 0.0;
  bool nan_ = false;
  std::string where_;
};

std::vector<double> unit_grid(double step, double stop) {
  std::vector<double> g;
  const auto n = static_cast<int>(std::lround(stop / step));
  for (int i = 0; i <= n; ++i) g.push_back(i * step);
  return g;
}

std::string at(double r, double q, double x = -1.0) {
  std::ostringstream s;
  s << "r=" << r << " q=" << q;
  if (x >= 0.0) s << " x=" << x;
  return s.str();
}

const std::array<double, 6> kInputs = {0.0, 0.1, 0.3, 0.5, 0.77, 1.0};

struct Ctx {
  const AnalyticOptions& opt;

  double cf(Quantity q, double x, double r, double qq, int branch = 1) const {
    const double v = closed_form(q, {x, r, qq, branch});
    return opt.perturbed == q ? v + opt.perturbation : v;
  }
};

Complex input_beta(double x) { return std::polar(std::sqrt(1.0 - x), 0.4); }

// Branch-resolved comparison of one weak-measurement protocol.
void branch_check(const Ctx& ctx, Protocol p, Quantity eam, Quantity prob, Quantity wm,
                  Quantity fid, Quantity total, Tracker& t) {
  for (double r : unit_grid(0.05, 1.0)) {
    for (double q : unit_grid(0.05, 1.0)) {
      for (double x : kInputs) {
        const Complex a = std::sqrt(x);
        const Complex b = input_beta(x);
        const ProtocolReport rep = run_protocol(p, a, b, r, q);
        const std::string w = at(r, q, x);
        t.diff(rep.eam_probability, ctx.cf(eam, x, r, q), w);
        t.diff(rep.conditional_success, ctx.cf(total, x, r, q), w);
        for (int i = 1; i <= 4; ++i) {
          const BranchOutcome& br = rep.branches[i - 1];
          t.diff(br.conditional_probability, ctx.cf(prob, x, r, q, i), w);
          t.diff(br.wm_success, ctx.cf(wm, x, r, q, i), w);
          if (br.wm_success < 1e-12) continue;
          t.diff(br.fidelity, ctx.cf(fid, x, r, q, i), w);
          const auto state = closed_form_output_state(p, a, b, r, q, i);
          t.add(state ? br.output_state->matrix().max_abs_diff(*state) : std::nan(""), w);
        }
      }
    }
  }
}

Check check_tp_ew(const Ctx& ctx, Protocol p) {
  Tracker t(std::string(protocol_name(p)) + ".branch_closed_forms", 1e-12);
  if (p == Protocol::kTpEwW) {
    branch_check(ctx, p, Quantity::kTpEwEamProbability, Quantity::kTpEwBranchProbability,
                 Quantity::kTpEwWmSuccess, Quantity::kTpEwBranchFidelity,
                 Quantity::kTpEwTotalSuccess, t);
  } else {
    branch_check(ctx, p, Quantity::kTpEwBellEamProbability, Quantity::kTpEwBellBranchProbability,
                 Quantity::kTpEwBellWmSuccess, Quantity::kTpEwBellBranchFidelity,
                 Quantity::kTpEwBellTotalSuccess, t);
  }
  return t.finish();
}

Check check_ctp_bell(const Ctx& ctx) {
  Tracker t("ctp-bell.branch_closed_forms", 1e-12);
  branch_check(ctx, Protocol::kCtpBell, Quantity::kCtpBellEamProbability,
               Quantity::kCtpBellBranchProbability, Quantity::kCtpBellWmSuccess,
               Quantity::kCtpBellBranchFidelity, Quantity::kCtpBellTotalSuccess, t);
  return t.finish();
}

Check check_tp_ew_total_success(const Ctx& ctx) {
  Tracker t("tp-ew.total_success", 1e-12);
  for (double r : unit_grid(0.05, 1.0)) {
    for (double q : unit_grid(0.05, 1.0)) {
      const ProtocolReport rep = run_tp_ew_w(std::sqrt(0.3), input_beta(0.3), r, q);
      t.diff(rep.conditional_success, ctx.cf(Quantity::kTpEwTotalSuccess, 0.3, r, q), at(r, q));
    }
  }
  return t.finish();
}

std::vector<Check> check_unit_fidelity(const Ctx& ctx) {
  Tracker t("tp-ew.unit_fidelity_at_q_eq_r", 1e-9);
  Tracker states("tp-ew.output_equals_input_at_q_eq_r", 1e-12);
  for (double r : unit_grid(0.1, 0.9)) {
    t.diff(average_fidelity(Protocol::kTpEwW, r, r, ctx.opt.quadrature), 1.0, at(r, r));
    for (double x : kInputs) {
      const Ket in = input_state(std::sqrt(x), input_beta(x));
      const ProtocolReport rep = run_tp_ew_w(in[0], in[1], r, r);
      for (const BranchOutcome& b : rep.branches) {
        if (!b.output_state) continue;
        states.add(b.output_state->matrix().max_abs_diff(in.projector()), at(r, r, x));
      }
    }
  }
  return {t.finish(), states.finish()};
}

Check check_ctp_w(const Ctx& ctx) {
  Tracker t("ctp-w.closed_forms", 1e-12);
  for (double r : unit_grid(0.05, 1.0)) {
    for (double x : kInputs) {
      const ProtocolReport rep = run_ctp_w(std::sqrt(x), input_beta(x), r);
      const std::string w = at(r, 0.0, x);
      if (r >= 1.0) {
        t.add(rep.degenerate ? 0.0 : 1.0, w);
        continue;
      }
      t.diff(rep.eam_probability, ctx.cf(Quantity::kCtpWEamProbability, x, r, 0.0), w);
      t.diff(rep.conditional_success, 1.0, w);
      for (const BranchOutcome& b : rep.branches) {
        t.diff(b.conditional_probability, 0.25, w);
        t.diff(b.fidelity, 1.0, w);
      }
    }
  }
  return t.finish();
}

Check check_ctp_w_shared_state() {
  Tracker t("ctp-w.post_eam_state", 1e-15);
  const std::array<std::size_t, 3> all = {0, 1, 2};
  const ComplexMatrix w = w_state().projector();
  for (double r : unit_grid(0.05, 0.95)) {
    const PostSelection s = eam_select(lift(adc(r), all, 3), w_state(), "e0,e0,e0");
    t.add(s.state.matrix().max_abs_diff(w), at(r, 0.0));
  }
  return t.finish();
}

Check check_original(const Ctx& ctx) {
  Tracker t("original.branch_closed_forms", 1e-12);
  for (Protocol p : {Protocol::kOriginalW, Protocol::kOriginalBell}) {
    for (double r : unit_grid(0.05, 1.0)) {
      for (double x : kInputs) {
        const Complex a = std::sqrt(x);
        const Complex b = input_beta(x);
        const ProtocolReport rep = run_protocol(p, a, b, r, 0.0);
        const std::string w = std::string(protocol_name(p)) + " " + at(r, 0.0, x);
        for (int i = 1; i <= 4; ++i) {
          const BranchOutcome& br = rep.branches[i - 1];
          t.diff(br.conditional_probability, 0.25, w);
          t.diff(br.fidelity, ctx.cf(Quantity::kOriginalBranchFidelity, x, r, 0.0, i), w);
          const auto state = closed_form_output_state(p, a, b, r, 0.0, i);
          t.add(br.output_state->matrix().max_abs_diff(*state), w);
        }
      }
    }
  }
  return t.finish();
}

Check check_displayed_averages(const Ctx& ctx) {
  Tracker t("averages.displayed_closed_forms", 1e-9);
  const QuadratureSettings& s = ctx.opt.quadrature;
  for (double r : unit_grid(0.05, 1.0)) {
    const std::string w = at(r, 0.0);
    const double eq22 = ctx.cf(Quantity::kOriginalAverageFidelity, 0.5, r, 0.0);
    t.diff(average_fidelity(Protocol::kOriginalW, r, 0.0, s), eq22, "original-w " + w);
    t.diff(average_fidelity(Protocol::kOriginalBell, r, 0.0, s), eq22, "original-bell " + w);
    t.diff(average_fidelity(Protocol::kOriginalCtpW, r, 0.0, s),
           ctx.cf(Quantity::kOriginalCtpWAverageFidelity, 0.5, r, 0.0), "original-cw " + w);
    t.diff(average_fidelity(Protocol::kOriginalCtpBell, r, 0.0, s),
           ctx.cf(Quantity::kOriginalCtpBellAverageFidelity, 0.5, r, 0.0), "original-cb " + w);
    if (r < 1.0) {
      t.diff(average_fidelity(Protocol::kCtpW, r, 0.0, s),
             ctx.cf(Quantity::kCtpWAverageFidelity, 0.5, r, 0.0), "ctp-w " + w);
    }
  }
  t.diff(ctx.cf(Quantity::kOriginalAverageFidelity, 0.5, 0.0, 0.0), 1.0, "Fid(0)");
  t.diff(ctx.cf(Quantity::kOriginalAverageFidelity, 0.5, 1.0, 0.0), 0.5, "Fid(1)");
  return t.finish();
}

Check check_route_consistency(const Ctx& ctx) {
  Tracker t("averages.constructive_vs_closed_form", 1e-9);
  const QuadratureSettings& s = ctx.opt.quadrature;
  for (Protocol p : {Protocol::kTpEwW, Protocol::kTpEwBell, Protocol::kCtpBell}) {
    for (double r : unit_grid(0.05, 1.0)) {
      for (double q : unit_grid(0.1, 1.0)) {
        t.diff(average_fidelity(p, r, q, s, Route::kConstructive),
               average_fidelity(p, r, q, s, Route::kClosedForm),
               std::string(protocol_name(p)) + " " + at(r, q));
      }
    }
  }
  return t.finish();
}

Check check_quadrature_convergence(const Ctx& ctx) {
  Tracker t("quadrature.node_doubling", 1e-10);
  QuadratureSettings base = ctx.opt.quadrature;
  QuadratureSettings twice = base;
  twice.nodes *= 2;
  for (Protocol p : {Protocol::kTpEwW, Protocol::kCtpBell, Protocol::kOriginalW, Protocol::kMr}) {
    for (double r : unit_grid(0.05, 1.0)) {
      for (double q : {0.0, 0.5 * r, r, 0.9}) {
        t.diff(average_fidelity(p, r, q, base, Route::kClosedForm),
               average_fidelity(p, r, q, twice, Route::kClosedForm),
               std::string(protocol_name(p)) + " " + at(r, q));
      }
    }
  }
  return t.finish();
}

Check check_mr(const Ctx& ctx) {
  Tracker t("mr.closed_forms", 1e-12);
  double prev = 2.0;
  for (double r : unit_grid(0.05, 1.0)) {
    const std::string w = at(r, 0.0);
    t.diff(ctx.cf(Quantity::kMrTotalSuccess, 0.5, r, 0.0), (1.0 - r) * (2.0 + r) / 2.0, w);
    const double fid = average_fidelity(Protocol::kMr, r, 0.0, ctx.opt.quadrature);
    if (r == 0.0) t.diff(fid, 1.0, w);
    t.add(std::max(0.0, fid - prev), "monotone " + w);
    prev = fid;
    // TP-EW at q = 0 never loses success probability relative to MR.
    t.add(std::max(0.0, ctx.cf(Quantity::kMrTotalSuccess, 0.5, r, 0.0) -
                            ctx.cf(Quantity::kTpEwTotalSuccess, 0.5, r, 0.0)),
          "g_tot ordering " + w);
  }
  return t.finish();
}

Check check_ctp_bell_spots(const Ctx& ctx) {
  Tracker t("ctp-bell.spot_values", 1e-12);
  t.diff(ctx.cf(Quantity::kCtpBellTotalSuccess, 0.5, 0.5, 0.5), 0.4, "g_tot(0.5, 0.5)");
  t.diff(run_ctp_bell(std::sqrt(0.3), input_beta(0.3), 0.5, 0.5).conditional_success, 0.4,
         "constructive g_tot(0.5, 0.5)");
  t.diff(ctx.cf(Quantity::kCtpBellEamProbability, 0.5, 0.5, 0.0), 0.625, "eam(0.5)");
  for (double r : unit_grid(0.1, 0.9)) {
    t.diff(average_fidelity(Protocol::kCtpBell, r, r, ctx.opt.quadrature), 1.0, at(r, r));
  }
  return t.finish();
}

Check check_w_bell_equivalence() {
  Tracker t("tp-ew.w_bell_equivalence", 1e-12);
  for (double r : unit_grid(0.05, 1.0)) {
    for (double q : unit_grid(0.05, 1.0)) {
      for (double x : kInputs) {
        const ProtocolReport w = run_tp_ew_w(std::sqrt(x), input_beta(x), r, q);
        const ProtocolReport b = run_tp_ew_bell(std::sqrt(x), input_beta(x), r, q);
        const std::string where = at(r, q, x);
        t.diff(w.eam_probability, b.eam_probability, where);
        t.diff(w.conditional_success, b.conditional_success, where);
        t.diff(w.unconditional_success, b.unconditional_success, where);
        t.diff(w.mean_fidelity_for_input, b.mean_fidelity_for_input, where);
        for (std::size_t i = 0; i < 4; ++i) {
          const BranchOutcome& bw = w.branches[i];
          const BranchOutcome& bb = b.branches[i];
          t.diff(bw.conditional_probability, bb.conditional_probability, where);
          t.diff(bw.wm_success, bb.wm_success, where);
          if (bw.output_state.has_value() != bb.output_state.has_value()) {
            t.add(1.0, where);
            continue;
          }
          if (!bw.output_state) continue;
          t.diff(bw.fidelity, bb.fidelity, where);
          t.add(bw.output_state->matrix().max_abs_diff(bb.output_state->matrix()), where);
        }
      }
    }
  }
  return t.finish();
}

std::vector<Check> check_decomposition(const Ctx& ctx) {
  Tracker t("decomposition.argmax_and_value", 1e-9);
  Tracker cross("decomposition.success_product", 1e-12);
  std::vector<double> deltas;
  for (int k = 0; k <= 400; ++k) deltas.push_back(k * std::numbers::pi / 200.0);
  const std::vector<double> rs = unit_grid(0.05, 0.95);
  const auto table = decomposition_sweep(rs, deltas);
  const auto flags = row_argmax(table);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double r = rs[i];
    const double top = *std::max_element(table[i].begin(), table[i].end());
    t.diff(top, 1.0 - r, at(r, 0.0));
    if (r == 0.0) continue;
    for (std::size_t j = 0; j < deltas.size(); ++j) {
      const bool quarter = j % 100 == 0;
      if (flags[i][j] != quarter) t.add(1.0, at(r, 0.0) + " delta index " + std::to_string(j));
    }
    // Accepting the no-jump branch, then reversing it with q = r.
    const double product = ctx.cf(Quantity::kTpEwEamProbability, 0.5, r, r) *
                           ctx.cf(Quantity::kTpEwTotalSuccess, 0.5, r, r);
    cross.diff(product, 1.0 - r, at(r, r));
  }
  return {t.finish(), cross.finish()};
}

Check check_orderings(const Ctx& ctx) {
  Tracker t("averages.orderings", 0.0);
  const QuadratureSettings& s = ctx.opt.quadrature;
  for (double r : unit_grid(0.05, 0.95)) {
    if (r == 0.0) continue;
    const double mr = average_fidelity(Protocol::kMr, r, 0.0, s);
    const double ridge = average_fidelity(Protocol::kTpEwW, r, r, s);
    const double no_wm = average_fidelity(Protocol::kTpEwW, r, 0.0, s);
    const double eq22 = ctx.cf(Quantity::kOriginalAverageFidelity, 0.5, r, 0.0);
    t.add(std::max(0.0, mr - ridge), "TP-EW(q=r) >= MR " + at(r, 0.0));
    t.add(std::max(0.0, std::max(mr, eq22) - no_wm), "TP-EW(q=0) >= max(MR, baseline) " + at(r, 0.0));
  }
  for (double r : unit_grid(0.05, 1.0)) {
    t.add(std::max(0.0, ctx.cf(Quantity::kOriginalCtpWAverageFidelity, 0.5, r, 0.0) -
                            ctx.cf(Quantity::kOriginalCtpBellAverageFidelity, 0.5, r, 0.0)),
          "controlled Bell >= controlled W " + at(r, 0.0));
  }
  return t.finish();
}

Check check_phase_independence() {
  Tracker t("protocols.phase_independence", 1e-10);
  for (Protocol p : constructive_protocols()) {
    for (double r : {0.0, 0.3, 0.9}) {
      for (double q : {0.0, 0.5, 0.9}) {
        for (double x : {0.0, 0.3, 0.8}) {
          t.add(phase_independence_probe(p, r, q, 20, x, 7),
                std::string(protocol_name(p)) + " " + at(r, q, x));
        }
      }
    }
  }
  return t.finish();
}

// Constructive expectations for one Monte Carlo configuration.
std::map<std::string, double> expected_values(const TrajectoryConfig& c) {
  std::map<std::string, double> out;
  auto fill = [&](const ProtocolReport& rep, double w, bool branch_fid) {
    out["eam_probability"] += w * rep.eam_probability;
    out["conditional_success"] += w * rep.conditional_success;
    out["unconditional_success"] += w * rep.unconditional_success;
    out["average_fidelity"] += w * rep.mean_fidelity_for_input;
    for (int i = 0; i < 4; ++i) {
      const std::string idx = std::to_string(i + 1);
      out["branch_probability_" + idx] += w * rep.branches[i].conditional_probability;
      if (branch_fid) out["branch_fidelity_" + idx] = rep.branches[i].fidelity;
    }
  };
  if (c.alpha) {
    fill(run_protocol(c.protocol, *c.alpha, *c.beta, c.r, c.q), 1.0, true);
  } else {
    QuadratureSettings s;
    s.measure = c.measure;
    const auto avg = average_over_inputs(
        [&](double x, std::span<double> v) {
          const ProtocolReport rep = run_protocol(c.protocol, std::sqrt(x), std::sqrt(1.0 - x), c.r, c.q);
          v[0] = rep.eam_probability;
          v[1] = rep.conditional_success;
          v[2] = rep.unconditional_success;
          v[3] = rep.mean_fidelity_for_input;
          for (std::size_t i = 0; i < 4; ++i) v[4 + i] = rep.branches[i].conditional_probability;
        },
        8, s);
    out["eam_probability"] = avg[0];
    out["conditional_success"] = avg[1];
    out["unconditional_success"] = avg[2];
    out["average_fidelity"] = avg[3];
    for (int i = 0; i < 4; ++i) out["branch_probability_" + std::to_string(i + 1)] = avg[4 + i];
  }
  return out;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["passed"] = passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["deviation"] = std::isnan(c.deviation) ? nlohmann::json() : nlohmann::json(c.deviation);
    cj["tolerance"] = c.tolerance;
    cj["detail"] = c.detail;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j;
}

ValidationReport validate_analytic(const AnalyticOptions& options) {
  const Ctx ctx{options};
  ValidationReport rep{"analytic", {}};
  rep.checks.push_back(check_tp_ew_total_success(ctx));
  rep.checks.push_back(check_tp_ew(ctx, Protocol::kTpEwW));
  rep.checks.push_back(check_tp_ew(ctx, Protocol::kTpEwBell));
  for (Check& c : check_unit_fidelity(ctx)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_w_bell_equivalence());
  rep.checks.push_back(check_ctp_w(ctx));
  rep.checks.push_back(check_ctp_w_shared_state());
  rep.checks.push_back(check_ctp_bell(ctx));
  rep.checks.push_back(check_ctp_bell_spots(ctx));
  rep.checks.push_back(check_original(ctx));
  rep.checks.push_back(check_displayed_averages(ctx));
  rep.checks.push_back(check_route_consistency(ctx));
  rep.checks.push_back(check_quadrature_convergence(ctx));
  rep.checks.push_back(check_mr(ctx));
  for (Check& c : check_decomposition(ctx)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_orderings(ctx));
  rep.checks.push_back(check_phase_independence());
  return rep;
}

ValidationReport validate_mc(const McOptions& options) {
  ValidationReport rep{"mc", {}};
  const std::array<double, 3> rs = {0.2, 0.5, 0.8};
  const std::array<double, 3> qs = {0.0, 0.3, 0.6};
  const double x = 0.3;
  const Complex alpha = std::sqrt(x);
  const Complex beta = std::polar(std::sqrt(1.0 - x), 0.7);

  for (bool fixed : {true, false}) {
    for (Protocol p : constructive_protocols()) {
      Tracker t(std::string("mc.") + std::string(protocol_name(p)) + (fixed ? ".fixed" : ".random"),
                0.0);
      for (double r : rs) {
        for (double q : qs) {
          if (!uses_weak_measurement(p) && q != qs[0]) continue;
          TrajectoryConfig c;
          c.seed = options.seed;
          c.n_trajectories = options.n_trajectories;
          c.protocol = p;
          c.r = r;
          c.q = q;
          c.measure = options.measure;
          c.workers = options.workers;
          if (fixed) {
            c.alpha = alpha;
            c.beta = beta;
          }
          const auto est = run_trajectories(c);
          const auto want = expected_values(c);
          for (const auto& [name, e] : est) {
            const auto it = want.find(name);
            if (it == want.end()) continue;
            // An unreachable branch has no samples; its value is then undefined.
            if (e.n_accepted == 0 || std::isnan(it->second)) continue;
            const double band = options.n_sigma * e.standard_error + 1e-12;
            const double excess = std::max(0.0, std::abs(e.mean - it->second) - band);
            t.add(excess, name + " " + at(r, q));
            if (e.standard_error < 0.0 || e.n_accepted > e.n_total) t.add(1.0, name + " bookkeeping");
          }
        }
      }
      rep.checks.push_back(t.finish());
    }
  }

  Tracker repro("mc.reproducibility", 0.0);
  TrajectoryConfig c;
  c.seed = options.seed;
  c.n_trajectories = options.n_trajectories;
  c.protocol = Protocol::kTpEwW;
  c.r = 0.5;
  c.q = 0.3;
  c.measure = options.measure;
  c.workers = options.workers;
  const auto first = run_trajectories(c);
  c.workers = options.workers == 1 ? 2 : 1;
  const auto second = run_trajectories(c);
  for (const auto& [name, e] : first) {
    const McEstimate& o = second.at(name);
    const bool same = (e.mean == o.mean || (std::isnan(e.mean) && std::isnan(o.mean))) &&
                      (e.standard_error == o.standard_error ||
                       (std::isnan(e.standard_error) && std::isnan(o.standard_error))) &&
                      e.n_accepted == o.n_accepted && e.n_total == o.n_total;
    if (!same) repro.add(1.0, name);
  }
  rep.checks.push_back(repro.finish());
  return rep;
}

}  // namespace eamtp
