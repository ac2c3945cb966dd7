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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace eamtp {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// How input states are drawn when averaging over them.
enum class InputMeasure {
  /// |alpha| uniform on [0, 1], x = |alpha|^2. Reproduces the displayed
  /// unprotected-baseline averages.
  kAmplitude,
  /// x = |alpha|^2 uniform on [0, 1].
  kPopulation,
};

std::string_view measure_name(InputMeasure m);
InputMeasure parse_measure(std::string_view name);

struct QuadratureSettings {
  std::size_t nodes = 64;  ///< total nodes, split evenly over panels
  std::size_t panels = 4;
  InputMeasure measure = InputMeasure::kAmplitude;
  /// Panels are bisected while halving changes their contribution by more
  /// than tolerance * width. Zero keeps the fixed composite rule. Some
  /// integrands have poles just outside [0, 1] when q or r is close to 1.
  double tolerance = 1e-13;
  std::size_t max_depth = 40;
};

/// Population nodes x_k in (0, 1) and weights w_k with sum w_k f(x_k)
/// approximating the input average of f under `s.measure`.
struct InputRule {
  std::vector<double> x;
  std::vector<double> weights;
};

InputRule input_rule(const QuadratureSettings& s);

double average_over_inputs(const std::function<double(double)>& f, const QuadratureSettings& s);

/// Several integrands sharing nodes; `f(x, out)` fills out[0..n_outputs).
/// Refinement follows the worst component. A NaN anywhere stops refinement.
using VectorIntegrand = std::function<void(double, std::span<double>)>;
std::vector<double> average_over_inputs(const VectorIntegrand& f, std::size_t n_outputs,
                                        const QuadratureSettings& s);

}  // namespace eamtp
