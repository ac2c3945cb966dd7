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
#include <string>
#include <vector>

#include <json.hpp>

#include "eamtp/analytics.hpp"

namespace eamtp {

struct Check {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  ///< worst measured deviation (or margin violation)
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct AnalyticOptions {
  QuadratureSettings quadrature{};
  /// Test fixture: shift one closed form by `perturbation` to confirm the
  /// suite notices.
  std::optional<Quantity> perturbed;
  double perturbation = 1e-6;
};

ValidationReport validate_analytic(const AnalyticOptions& options = {});

struct McOptions {
  std::uint64_t seed = 42;
  std::size_t n_trajectories = 1000000;
  std::size_t workers = 1;
  InputMeasure measure = InputMeasure::kAmplitude;
  double n_sigma = 5.0;
};

/// Every constructive protocol on r in {0.2, 0.5, 0.8} x q in {0, 0.3, 0.6}
/// (q-independent protocols use r only), once with a fixed input and once with
/// per-trajectory random inputs, plus a same-seed rerun under a different
/// worker count that must match bit for bit.
ValidationReport validate_mc(const McOptions& options = {});

}  // namespace eamtp
