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

#include "eamtp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eamtp/error.hpp"

namespace eamtp {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw InvalidInput("Gauss-Legendre rule needs at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

std::string_view measure_name(InputMeasure m) {
  return m == InputMeasure::kAmplitude ? "amplitude" : "population";
}

InputMeasure parse_measure(std::string_view name) {
  if (name == "amplitude") return InputMeasure::kAmplitude;
  if (name == "population") return InputMeasure::kPopulation;
  throw InvalidInput("unknown input measure '" + std::string(name) + "'");
}

InputRule input_rule(const QuadratureSettings& s) {
  if (s.panels == 0 || s.nodes == 0 || s.nodes % s.panels != 0) {
    throw InvalidInput("quadrature nodes must be a positive multiple of the panel count");
  }
  const GaussLegendreRule base = gauss_legendre(s.nodes / s.panels);
  const double width = 1.0 / static_cast<double>(s.panels);
  InputRule out;
  out.x.reserve(s.nodes);
  out.weights.reserve(s.nodes);
  for (std::size_t p = 0; p < s.panels; ++p) {
    const double lo = width * static_cast<double>(p);
    for (std::size_t k = 0; k < base.nodes.size(); ++k) {
      const double t = lo + 0.5 * width * (base.nodes[k] + 1.0);
      out.x.push_back(s.measure == InputMeasure::kAmplitude ? t * t : t);
      out.weights.push_back(0.5 * width * base.weights[k]);
    }
  }
  return out;
}

namespace {

class Adaptive {
 public:
  Adaptive(const VectorIntegrand& f, std::size_t n_out, const QuadratureSettings& s)
      : f_(f), n_out_(n_out), s_(s), base_(gauss_legendre(s.nodes / s.panels)), y_(n_out + 1) {}

  // Slot n_out_ integrates 1, so the caller can divide by the exact weight
  // sum and constant integrands come out exact.
  std::vector<double> panel(double lo, double hi) {
    std::vector<double> acc(n_out_ + 1, 0.0);
    const double half = 0.5 * (hi - lo);
    const std::span<double> y(y_.data(), n_out_);
    y_[n_out_] = 1.0;
    for (std::size_t k = 0; k < base_.nodes.size(); ++k) {
      const double t = lo + half * (base_.nodes[k] + 1.0);
      f_(s_.measure == InputMeasure::kAmplitude ? t * t : t, y);
      for (std::size_t j = 0; j <= n_out_; ++j) acc[j] += half * base_.weights[k] * y_[j];
    }
    return acc;
  }

  void refine(double lo, double hi, const std::vector<double>& whole, std::size_t depth,
              std::vector<double>& total) {
    const double mid = 0.5 * (lo + hi);
    const std::vector<double> left = panel(lo, mid);
    const std::vector<double> right = panel(mid, hi);
    double err = 0.0;
    bool finite = true;
    for (std::size_t j = 0; j <= n_out_; ++j) {
      const double both = left[j] + right[j];
      if (!std::isfinite(both)) finite = false;
      err = std::max(err, std::abs(both - whole[j]));
    }
    if (!finite || err <= s_.tolerance * (hi - lo) || depth >= s_.max_depth) {
      for (std::size_t j = 0; j <= n_out_; ++j) total[j] += left[j] + right[j];
      return;
    }
    refine(lo, mid, left, depth + 1, total);
    refine(mid, hi, right, depth + 1, total);
  }

 private:
  const VectorIntegrand& f_;
  std::size_t n_out_;
  const QuadratureSettings& s_;
  GaussLegendreRule base_;
  std::vector<double> y_;
};

}  // namespace

std::vector<double> average_over_inputs(const VectorIntegrand& f, std::size_t n_outputs,
                                        const QuadratureSettings& s) {
  if (s.panels == 0 || s.nodes == 0 || s.nodes % s.panels != 0) {
    throw InvalidInput("quadrature nodes must be a positive multiple of the panel count");
  }
  Adaptive integ(f, n_outputs, s);
  std::vector<double> total(n_outputs + 1, 0.0);
  const double width = 1.0 / static_cast<double>(s.panels);
  for (std::size_t p = 0; p < s.panels; ++p) {
    const double lo = width * static_cast<double>(p);
    const double hi = p + 1 == s.panels ? 1.0 : lo + width;
    const std::vector<double> whole = integ.panel(lo, hi);
    if (s.tolerance > 0.0) {
      integ.refine(lo, hi, whole, 0, total);
    } else {
      for (std::size_t j = 0; j <= n_outputs; ++j) total[j] += whole[j];
    }
  }
  const double mass = total[n_outputs];
  total.pop_back();
  for (double& v : total) v /= mass;
  return total;
}

double average_over_inputs(const std::function<double(double)>& f, const QuadratureSettings& s) {
  return average_over_inputs([&f](double x, std::span<double> out) { out[0] = f(x); }, 1, s)[0];
}

}  // namespace eamtp
