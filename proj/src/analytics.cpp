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

#include "eamtp/analytics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "eamtp/channels.hpp"
#include "eamtp/error.hpp"
#include "eamtp/random.hpp"

namespace eamtp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct QuantityEntry {
  Quantity id;
  std::string_view name;
};

constexpr std::array<QuantityEntry, 23> kQuantities = {{
    {Quantity::kTpEwEamProbability, "tp-ew.eam_probability"},
    {Quantity::kTpEwBranchProbability, "tp-ew.branch_probability"},
    {Quantity::kTpEwWmSuccess, "tp-ew.wm_success"},
    {Quantity::kTpEwTotalSuccess, "tp-ew.total_success"},
    {Quantity::kTpEwBranchFidelity, "tp-ew.branch_fidelity"},
    {Quantity::kTpEwBellEamProbability, "tp-ew-bell.eam_probability"},
    {Quantity::kTpEwBellBranchProbability, "tp-ew-bell.branch_probability"},
    {Quantity::kTpEwBellWmSuccess, "tp-ew-bell.wm_success"},
    {Quantity::kTpEwBellTotalSuccess, "tp-ew-bell.total_success"},
    {Quantity::kTpEwBellBranchFidelity, "tp-ew-bell.branch_fidelity"},
    {Quantity::kOriginalBranchFidelity, "original.branch_fidelity"},
    {Quantity::kOriginalAverageFidelity, "original.average_fidelity"},
    {Quantity::kMrFidelityIntegrand, "mr.fidelity_integrand"},
    {Quantity::kMrTotalSuccess, "mr.total_success"},
    {Quantity::kCtpWEamProbability, "ctp-w.eam_probability"},
    {Quantity::kCtpWAverageFidelity, "ctp-w.average_fidelity"},
    {Quantity::kOriginalCtpWAverageFidelity, "original-cw.average_fidelity"},
    {Quantity::kCtpBellEamProbability, "ctp-bell.eam_probability"},
    {Quantity::kCtpBellBranchProbability, "ctp-bell.branch_probability"},
    {Quantity::kCtpBellWmSuccess, "ctp-bell.wm_success"},
    {Quantity::kCtpBellTotalSuccess, "ctp-bell.total_success"},
    {Quantity::kCtpBellBranchFidelity, "ctp-bell.branch_fidelity"},
    {Quantity::kOriginalCtpBellAverageFidelity, "original-cb.average_fidelity"},
}};

constexpr std::array<Quantity, 23> kQuantityIds = [] {
  std::array<Quantity, 23> out{};
  for (std::size_t i = 0; i < kQuantities.size(); ++i) out[i] = kQuantities[i].id;
  return out;
}();

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidInput(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

bool low_pair(int branch) {
  if (branch < 1 || branch > 4) throw InvalidInput("branch must be 1..4");
  return branch <= 2;
}

// Weak-measurement protected teleportation with one damped qubit.
double tp_ew_branch_probability(double x, double r, int branch) {
  const double y = 1.0 - x;
  return (low_pair(branch) ? 1.0 - y * r : 1.0 - x * r) / (4.0 - 2.0 * r);
}

double tp_ew_wm_success(double x, double r, double q, int branch) {
  const double y = 1.0 - x;
  const double num = low_pair(branch) ? x * (1.0 - q) + y * (1.0 - r) : x * (1.0 - r) + y * (1.0 - q);
  return num / (4.0 - 2.0 * r);
}

double tp_ew_branch_fidelity(double x, double r, double q, int branch) {
  const double y = 1.0 - x;
  const double cross = 2.0 * x * y * std::sqrt(1.0 - q) * std::sqrt(1.0 - r);
  if (low_pair(branch)) {
    return (y * y * (1.0 - r) + x * x * (1.0 - q) + cross) / (x * (1.0 - q) + y * (1.0 - r));
  }
  return (y * y * (1.0 - q) + x * x * (1.0 - r) + cross) / (x * (1.0 - r) + y * (1.0 - q));
}

double ctp_bell_branch_probability(double x, double r, int branch) {
  const double w = low_pair(branch) ? 1.0 - x : x;
  return (w * r * r - 2.0 * w * r + 1.0) / (2.0 * (r * r - 2.0 * r + 2.0));
}

double ctp_bell_wm_success(double x, double r, double q, int branch) {
  const double y = 1.0 - x;
  const double a = (1.0 - q) * (1.0 - q);
  const double b = (1.0 - r) * (1.0 - r);
  const double num = low_pair(branch) ? x * a + y * b : x * b + y * a;
  return num / (2.0 * (r * r - 2.0 * r + 2.0));
}

double ctp_bell_branch_fidelity(double x, double r, double q, int branch) {
  const double y = 1.0 - x;
  if (low_pair(branch)) {
    const double n = x * q + y * r - 1.0;
    return n * n / (x * (q * q - 2.0 * q) + y * (r * r - 2.0 * r) + 1.0);
  }
  const double n = y * q + x * r - 1.0;
  return n * n / (x * (r * r - 2.0 * r) + y * (q * q - 2.0 * q) + 1.0);
}

double original_branch_fidelity(double x, double r, int branch) {
  const double y = 1.0 - x;
  const double mixed = x * y * (r + 2.0 * std::sqrt(1.0 - r));
  return low_pair(branch) ? x * x + y * y * (1.0 - r) + mixed : y * y + x * x * (1.0 - r) + mixed;
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  for (const auto& e : kQuantities) {
    if (e.id == q) return e.name;
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (const auto& e : kQuantities) {
    if (e.name == name) return e.id;
  }
  throw InvalidInput("unknown quantity '" + std::string(name) + "'");
}

std::span<const Quantity> all_quantities() { return kQuantityIds; }

double closed_form(Quantity quantity, const FormulaParams& p) {
  check_unit(p.x, "x");
  check_unit(p.r, "r");
  check_unit(p.q, "q");
  const double x = p.x;
  const double r = p.r;
  const double q = p.q;
  switch (quantity) {
    case Quantity::kTpEwEamProbability:
    case Quantity::kTpEwBellEamProbability:
      return 1.0 - r / 2.0;
    case Quantity::kTpEwBranchProbability:
    case Quantity::kTpEwBellBranchProbability:
      return tp_ew_branch_probability(x, r, p.branch);
    case Quantity::kTpEwWmSuccess:
    case Quantity::kTpEwBellWmSuccess:
      return tp_ew_wm_success(x, r, q, p.branch);
    case Quantity::kTpEwTotalSuccess:
    case Quantity::kTpEwBellTotalSuccess:
      return 1.0 - q / (2.0 - r);
    case Quantity::kTpEwBranchFidelity:
    case Quantity::kTpEwBellBranchFidelity:
      return tp_ew_branch_fidelity(x, r, q, p.branch);
    case Quantity::kOriginalBranchFidelity:
      return original_branch_fidelity(x, r, p.branch);
    case Quantity::kOriginalAverageFidelity:
      return (8.0 * std::sqrt(1.0 - r) + 22.0 - 7.0 * r) / 30.0;
    case Quantity::kMrFidelityIntegrand: {
      const double y = 1.0 - x;
      const double num = 1.0 + r * x * y;
      return num / (2.0 * (1.0 + r * y)) + num / (2.0 * (1.0 + r * x));
    }
    case Quantity::kMrTotalSuccess:
      return (2.0 - r - r * r) / 2.0;
    case Quantity::kCtpWEamProbability:
      return 1.0 - r;
    case Quantity::kCtpWAverageFidelity:
      return 1.0;
    case Quantity::kOriginalCtpWAverageFidelity:
      return 1.0 - 11.0 * r / 15.0;
    case Quantity::kCtpBellEamProbability:
      return ((1.0 - r) * (1.0 - r) + 1.0) / 2.0;
    case Quantity::kCtpBellBranchProbability:
      return ctp_bell_branch_probability(x, r, p.branch);
    case Quantity::kCtpBellWmSuccess:
      return ctp_bell_wm_success(x, r, q, p.branch);
    case Quantity::kCtpBellTotalSuccess:
      return 1.0 - (2.0 * q - q * q) / (r * r - 2.0 * r + 2.0);
    case Quantity::kCtpBellBranchFidelity:
      return ctp_bell_branch_fidelity(x, r, q, p.branch);
    case Quantity::kOriginalCtpBellAverageFidelity:
      return 1.0 - 11.0 * r / 15.0 + 7.0 * r * r / 15.0;
  }
  throw InvalidInput("unknown quantity");
}

std::optional<ComplexMatrix> closed_form_output_state(Protocol p, Complex alpha, Complex beta,
                                                      double r, double q, int branch) {
  const bool low = low_pair(branch);
  const double x = std::norm(alpha);
  const double y = std::norm(beta);
  const Complex ab = alpha * std::conj(beta);
  auto build = [&](double top, double off, double bottom) -> std::optional<ComplexMatrix> {
    const double tr = top + bottom;
    if (!(tr > 0.0)) return std::nullopt;
    return ComplexMatrix{{top / tr, ab * off / tr}, {std::conj(ab) * off / tr, bottom / tr}};
  };
  switch (p) {
    case Protocol::kTpEwW:
    case Protocol::kTpEwBell: {
      const double off = std::sqrt(1.0 - q) * std::sqrt(1.0 - r);
      return low ? build(x * (1.0 - q), off, y * (1.0 - r)) : build(x * (1.0 - r), off, y * (1.0 - q));
    }
    case Protocol::kCtpBell: {
      const double off = (1.0 - r) * (1.0 - q);
      const double a = (1.0 - q) * (1.0 - q);
      const double b = (1.0 - r) * (1.0 - r);
      return low ? build(x * a, off, y * b) : build(x * b, off, y * a);
    }
    case Protocol::kOriginalW:
    case Protocol::kOriginalBell: {
      const double off = std::sqrt(1.0 - r);
      return low ? build(x + y * r, off, y * (1.0 - r)) : build(x * (1.0 - r), off, x * r + y);
    }
    case Protocol::kCtpW:
      if (r >= 1.0) return std::nullopt;
      return build(x, 1.0, y);
    default:
      return std::nullopt;
  }
}

double closed_form_eam_probability(Protocol p, double r) {
  const FormulaParams fp{0.5, r, 0.0, 1};
  switch (p) {
    case Protocol::kTpEwW: return closed_form(Quantity::kTpEwEamProbability, fp);
    case Protocol::kTpEwBell: return closed_form(Quantity::kTpEwBellEamProbability, fp);
    case Protocol::kCtpW: return closed_form(Quantity::kCtpWEamProbability, fp);
    case Protocol::kCtpBell: return closed_form(Quantity::kCtpBellEamProbability, fp);
    default: return 1.0;
  }
}

double closed_form_conditional_success(Protocol p, double r, double q) {
  const FormulaParams fp{0.5, r, q, 1};
  switch (p) {
    case Protocol::kTpEwW: return closed_form(Quantity::kTpEwTotalSuccess, fp);
    case Protocol::kTpEwBell: return closed_form(Quantity::kTpEwBellTotalSuccess, fp);
    case Protocol::kCtpBell: return closed_form(Quantity::kCtpBellTotalSuccess, fp);
    case Protocol::kMr: return closed_form(Quantity::kMrTotalSuccess, fp);
    case Protocol::kCtpW: return r >= 1.0 ? kNaN : 1.0;
    default: return 1.0;
  }
}

std::optional<double> closed_form_mean_fidelity(Protocol p, double x, double r, double q) {
  double total = 0.0;
  switch (p) {
    case Protocol::kTpEwW:
    case Protocol::kTpEwBell:
      for (int i = 1; i <= 4; ++i) {
        const double pi = tp_ew_branch_probability(x, r, i);
        if (pi > 0.0) total += pi * tp_ew_branch_fidelity(x, r, q, i);
      }
      return total;
    case Protocol::kCtpBell:
      for (int i = 1; i <= 4; ++i) {
        const double pi = ctp_bell_branch_probability(x, r, i);
        if (pi > 0.0) total += pi * ctp_bell_branch_fidelity(x, r, q, i);
      }
      return total;
    case Protocol::kOriginalW:
    case Protocol::kOriginalBell:
      for (int i = 1; i <= 4; ++i) total += 0.25 * original_branch_fidelity(x, r, i);
      return total;
    case Protocol::kCtpW:
      return r >= 1.0 ? kNaN : 1.0;
    case Protocol::kMr:
      return closed_form(Quantity::kMrFidelityIntegrand, {x, r, q, 1});
    default:
      return std::nullopt;
  }
}

std::optional<double> closed_form_average_fidelity(Protocol p, double r, double q) {
  const FormulaParams fp{0.5, r, q, 1};
  switch (p) {
    case Protocol::kOriginalW:
    case Protocol::kOriginalBell:
      return closed_form(Quantity::kOriginalAverageFidelity, fp);
    case Protocol::kCtpW:
      return r >= 1.0 ? kNaN : closed_form(Quantity::kCtpWAverageFidelity, fp);
    case Protocol::kOriginalCtpW:
      return closed_form(Quantity::kOriginalCtpWAverageFidelity, fp);
    case Protocol::kOriginalCtpBell:
      return closed_form(Quantity::kOriginalCtpBellAverageFidelity, fp);
    default:
      return std::nullopt;
  }
}

double average_fidelity(Protocol p, double r, double q, const QuadratureSettings& s, Route route) {
  check_unit(r, "r");
  check_unit(q, "q");
  if (route == Route::kConstructive && has_constructive_pipeline(p)) {
    return average_over_inputs(
        [&](double x) {
          const ProtocolReport rep = run_protocol(p, std::sqrt(x), std::sqrt(1.0 - x), r, q);
          return rep.degenerate ? kNaN : rep.mean_fidelity_for_input;
        },
        s);
  }
  if (closed_form_mean_fidelity(p, 0.5, r, q).has_value()) {
    return average_over_inputs([&](double x) { return *closed_form_mean_fidelity(p, x, r, q); }, s);
  }
  return closed_form_average_fidelity(p, r, q).value();
}

void SweepGrid::validate() const {
  for (const auto* axis : {&r_values, &q_values}) {
    if (axis->empty()) throw InvalidInput("sweep axes must be non-empty");
    for (std::size_t i = 0; i < axis->size(); ++i) {
      check_unit((*axis)[i], "grid value");
      if (i > 0 && !((*axis)[i] > (*axis)[i - 1])) {
        throw InvalidInput("grid values must be strictly increasing");
      }
    }
  }
}

std::vector<double> parse_grid(std::string_view spec) {
  auto to_double = [](std::string_view tok) {
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
      throw InvalidInput("cannot parse grid value '" + std::string(tok) + "'");
    }
    return v;
  };
  std::vector<double> out;
  if (spec.find(':') != std::string_view::npos) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw InvalidInput("range grid must be start:step:stop");
    const double start = to_double(spec.substr(0, c1));
    const double step = to_double(spec.substr(c1 + 1, c2 - c1 - 1));
    const double stop = to_double(spec.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) throw InvalidInput("range grid needs step > 0, stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      // Round to 12 decimals so 0.05 * 7 prints as 0.35.
      const double v = start + step * static_cast<double>(i);
      out.push_back(std::round(v * 1e12) / 1e12);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const auto comma = spec.find(',', pos);
      const auto tok = spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos);
      out.push_back(to_double(tok));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return out;
}

SweepResult sweep(Protocol p, const SweepGrid& grid, const QuadratureSettings& s, Route route,
                  std::size_t workers) {
  grid.validate();
  const std::size_t nr = grid.r_values.size();
  const std::size_t nq = grid.q_values.size();
  SweepResult res{p,
                  grid,
                  s,
                  route,
                  std::vector(nr, std::vector<double>(nq)),
                  std::vector(nr, std::vector<double>(nq)),
                  std::vector(nr, std::vector<double>(nq)),
                  std::vector(nr, std::vector<bool>(nq))};
  const bool constructive = route == Route::kConstructive && has_constructive_pipeline(p);
  // vector<bool> packs bits, so workers record flags here first.
  std::vector<char> deg(nr * nq, 0);
  // q-independent protocols are evaluated once per r and copied across q.
  const bool q_matters = uses_weak_measurement(p) || p == Protocol::kMr;

  auto cell = [&](std::size_t i, std::size_t j) {
    const double r = grid.r_values[i];
    const double q = q_matters ? grid.q_values[j] : 0.0;
    double fid = 0.0;
    double cond = 0.0;
    double uncond = 0.0;
    bool degenerate = false;
    if (constructive) {
      const std::vector<double> avg = average_over_inputs(
          [&](double x, std::span<double> out) {
            const ProtocolReport rep = run_protocol(p, std::sqrt(x), std::sqrt(1.0 - x), r, q);
            degenerate = degenerate || rep.degenerate;
            out[0] = rep.mean_fidelity_for_input;
            out[1] = rep.conditional_success;
            out[2] = rep.unconditional_success;
          },
          3, s);
      fid = avg[0];
      cond = avg[1];
      uncond = avg[2];
    } else {
      fid = average_fidelity(p, r, q, s, Route::kClosedForm);
      cond = closed_form_conditional_success(p, r, q);
      uncond = closed_form_eam_probability(p, r) * cond;
      degenerate = !std::isfinite(fid) || !std::isfinite(cond);
    }
    if (degenerate) fid = cond = uncond = kNaN;
    res.avg_fidelity[i][j] = fid;
    res.conditional_success[i][j] = cond;
    res.unconditional_success[i][j] = uncond;
    deg[i * nq + j] = degenerate ? 1 : 0;
  };

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < (q_matters ? nq : 1); ++j) todo.emplace_back(i, j);
  }
  workers = std::max<std::size_t>(1, std::min(workers, todo.size()));
  if (workers == 1) {
    for (const auto& [i, j] : todo) cell(i, j);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < todo.size(); t += workers) cell(todo[t].first, todo[t].second);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nq; ++j) res.degenerate[i][j] = deg[i * nq + j] != 0;
  }
  if (!q_matters) {
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 1; j < nq; ++j) {
        res.avg_fidelity[i][j] = res.avg_fidelity[i][0];
        res.conditional_success[i][j] = res.conditional_success[i][0];
        res.unconditional_success[i][j] = res.unconditional_success[i][0];
        res.degenerate[i][j] = res.degenerate[i][0];
      }
    }
  }
  return res;
}

std::vector<std::vector<double>> decomposition_sweep(std::span<const double> r_values,
                                                     std::span<const double> delta_values) {
  std::vector<std::vector<double>> out;
  out.reserve(r_values.size());
  for (double r : r_values) {
    const KrausChannel base = adc(r);
    std::vector<double> row;
    row.reserve(delta_values.size());
    for (double d : delta_values) {
      row.push_back(recoverable_probability(transform_kraus(base, rotation_family(d))));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<bool>> row_argmax(const std::vector<std::vector<double>>& table) {
  std::vector<std::vector<bool>> out;
  out.reserve(table.size());
  for (const auto& row : table) {
    const double top = row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
    std::vector<bool> flags(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) flags[j] = row[j] >= top - 1e-12;
    out.push_back(std::move(flags));
  }
  return out;
}

double unitary_probe(double r, std::size_t samples, std::uint64_t seed) {
  const KrausChannel base = adc(r);
  const CounterRng rng(seed);
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    StreamCursor cur(rng, s);
    const double two_pi = 2.0 * std::numbers::pi;
    const double a = two_pi * cur.uniform();
    const double b = two_pi * cur.uniform();
    const double g = two_pi * cur.uniform();
    // Haar measure on the mixing angle: cos^2 d uniform.
    const double d = std::acos(std::sqrt(cur.uniform()));
    best = std::max(best, recoverable_probability(transform_kraus(base, unitary_family(a, b, g, d))));
  }
  return best;
}

}  // namespace eamtp
