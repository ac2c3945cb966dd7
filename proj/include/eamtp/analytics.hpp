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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eamtp/linalg.hpp"
#include "eamtp/protocols.hpp"
#include "eamtp/quadrature.hpp"

namespace eamtp {

/// Closed-form expressions. Branch-resolved quantities read FormulaParams::branch
/// (1..4); x is the input population |alpha|^2.
enum class Quantity {
  kTpEwEamProbability,
  kTpEwBranchProbability,
  kTpEwWmSuccess,
  kTpEwTotalSuccess,
  kTpEwBranchFidelity,
  kTpEwBellEamProbability,
  kTpEwBellBranchProbability,
  kTpEwBellWmSuccess,
  kTpEwBellTotalSuccess,
  kTpEwBellBranchFidelity,
  kOriginalBranchFidelity,
  kOriginalAverageFidelity,
  kMrFidelityIntegrand,
  kMrTotalSuccess,
  kCtpWEamProbability,
  kCtpWAverageFidelity,
  kOriginalCtpWAverageFidelity,
  kCtpBellEamProbability,
  kCtpBellBranchProbability,
  kCtpBellWmSuccess,
  kCtpBellTotalSuccess,
  kCtpBellBranchFidelity,
  kOriginalCtpBellAverageFidelity,
};

struct FormulaParams {
  double x = 0.5;
  double r = 0.0;
  double q = 0.0;
  int branch = 1;
};

std::string_view quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);
std::span<const Quantity> all_quantities();

/// Throws InvalidInput when a parameter is outside its domain.
double closed_form(Quantity quantity, const FormulaParams& p);

/// Normalized output state of branch `branch` as displayed in closed form.
/// Available for every constructive protocol except the unprotected
/// controlled ones, which only have averaged closed forms.
std::optional<ComplexMatrix> closed_form_output_state(Protocol p, Complex alpha, Complex beta,
                                                      double r, double q, int branch);

/// Closed-form EAM acceptance, conditional success, and per-input mean
/// fidelity sum_i P_i fid_i for protocol `p`. mean fidelity is empty for
/// protocols whose closed form exists only as an average.
double closed_form_eam_probability(Protocol p, double r);
double closed_form_conditional_success(Protocol p, double r, double q);
std::optional<double> closed_form_mean_fidelity(Protocol p, double x, double r, double q);
/// Displayed closed-form average, where one exists.
std::optional<double> closed_form_average_fidelity(Protocol p, double r, double q);

enum class Route {
  kConstructive,  ///< integrate protocol-module reports
  kClosedForm,    ///< integrate closed-form integrands
};

/// Input-averaged sum_i P_i fid_i. The constructive route falls back to the
/// closed form for kMr. The closed-form route uses the displayed average when
/// no integrand exists. Returns NaN for degenerate channels.
double average_fidelity(Protocol p, double r, double q, const QuadratureSettings& s = {},
                        Route route = Route::kConstructive);

struct SweepGrid {
  std::vector<double> r_values;
  std::vector<double> q_values;

  /// Throws InvalidInput unless both axes are non-empty, within [0, 1]
  /// and strictly increasing.
  void validate() const;
};

/// "start:step:stop" inclusive (tolerant to rounding) or "a,b,c".
std::vector<double> parse_grid(std::string_view spec);

/// Row-major [r][q] surfaces.
struct SweepResult {
  Protocol protocol;
  SweepGrid grid;
  QuadratureSettings quadrature;
  Route route;
  std::vector<std::vector<double>> avg_fidelity;
  std::vector<std::vector<double>> conditional_success;
  std::vector<std::vector<double>> unconditional_success;
  std::vector<std::vector<bool>> degenerate;
};

/// Cells are independent; `workers` > 1 evaluates them on that many threads.
/// Output does not depend on the worker count.
SweepResult sweep(Protocol p, const SweepGrid& grid, const QuadratureSettings& s = {},
                  Route route = Route::kConstructive, std::size_t workers = 1);

/// recoverable_probability(transform(adc(r), rotation(delta))) for every
/// (r, delta), row-major in r.
std::vector<std::vector<double>> decomposition_sweep(std::span<const double> r_values,
                                                     std::span<const double> delta_values);

/// Cells within 1e-12 of their row maximum.
std::vector<std::vector<bool>> row_argmax(const std::vector<std::vector<double>>& table);

/// Largest recoverable probability over `samples` random U(2) mixings of
/// adc(r), drawn from a seeded stream.
double unitary_probe(double r, std::size_t samples, std::uint64_t seed);

}  // namespace eamtp
