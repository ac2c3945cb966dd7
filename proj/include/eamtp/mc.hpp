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
#include <map>
#include <optional>
#include <string>

#include "eamtp/linalg.hpp"
#include "eamtp/protocols.hpp"
#include "eamtp/quadrature.hpp"

namespace eamtp {

/// Trajectory simulation settings. When alpha/beta are absent each trajectory
/// draws its own input: population from `measure` and a uniform relative phase.
struct TrajectoryConfig {
  std::uint64_t seed = 0;
  std::size_t n_trajectories = 1000000;
  Protocol protocol = Protocol::kTpEwW;
  std::optional<Complex> alpha;
  std::optional<Complex> beta;
  double r = 0.0;
  double q = 0.0;
  InputMeasure measure = InputMeasure::kAmplitude;
  std::size_t workers = 1;

  void validate() const;
};

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t n_accepted = 0;  ///< samples that entered this estimate
  std::size_t n_total = 0;     ///< trajectories run
};

/// Estimates keyed by name:
///   eam_probability, conditional_success, unconditional_success,
///   branch_probability_{1..4} (given EAM acceptance),
///   average_fidelity (sum_i P_i fid_i, importance-weighted by the click probability),
///   branch_fidelity_{1..4} (fixed input only; given a click on that branch).
/// Results are bit-identical for a given config regardless of `workers`.
std::map<std::string, McEstimate> run_trajectories(const TrajectoryConfig& config);

/// Trajectories are processed in blocks of this size; blocks are merged in order.
inline constexpr std::size_t kTrajectoryBlock = 65536;

/// Largest |fidelity(phase) - fidelity(0)| over `n_phases` seeded relative
/// phases of beta (a global phase is unobservable), taken over the per-input mean and each branch fidelity of the
/// constructive pipeline. Zero for protocols without one.
double phase_independence_probe(Protocol p, double r, double q, std::size_t n_phases,
                                double x = 0.3, std::uint64_t seed = 0);

}  // namespace eamtp
