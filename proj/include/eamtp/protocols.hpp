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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eamtp/channels.hpp"
#include "eamtp/linalg.hpp"
#include "eamtp/states.hpp"

namespace eamtp {

enum class Protocol {
  kTpEwW,             ///< EAM + weak measurement, W state, one damped qubit
  kTpEwBell,          ///< EAM + weak measurement, Bell state, one damped qubit
  kCtpW,              ///< controlled, W state, all qubits damped, EAM only
  kCtpBell,           ///< controlled, Bell state, both qubits damped, EAM + WM
  kOriginalW,         ///< unprotected, W state, one damped qubit
  kOriginalBell,      ///< unprotected, Bell state, one damped qubit
  kOriginalCtpW,      ///< unprotected controlled, W state
  kOriginalCtpBell,   ///< unprotected controlled, Bell state
  kMr,                ///< measurement-reversal baseline (closed forms only)
};

enum class Entanglement { kW, kBell };

std::string_view protocol_name(Protocol p);
/// Accepts the names produced by protocol_name plus "tp-ew" for kTpEwW.
Protocol parse_protocol(std::string_view name);
/// Every protocol that has a constructive pipeline.
std::span<const Protocol> constructive_protocols();
bool has_constructive_pipeline(Protocol p);
/// True when the weak-measurement strength changes the outcome.
bool uses_weak_measurement(Protocol p);
Entanglement entanglement_of(Protocol p);

/// One of Alice's four measurement outcomes, after Bob's correction.
struct BranchOutcome {
  std::string label;               ///< "eta1".."eta4" or "b1".."b4"
  double conditional_probability;  ///< P_i given the EAM step succeeded
  double wm_success;               ///< g_i: outcome i and the kept WM click
  std::optional<DensityMatrix> output_state;  ///< empty when g_i is zero
  double fidelity;                 ///< NaN when output_state is empty
};

struct ProtocolReport {
  Protocol protocol;
  Complex alpha;
  Complex beta;
  double r;
  double q;
  double eam_probability;
  std::vector<BranchOutcome> branches;
  double conditional_success;    ///< sum of g_i
  double unconditional_success;  ///< eam_probability * conditional_success
  double mean_fidelity_for_input;  ///< sum of P_i * fid_i
  /// Set when the EAM branch cannot occur (e.g. every qubit fully damped).
  bool degenerate = false;
  std::vector<std::string> warnings;
};

ProtocolReport run_tp_ew_w(Complex alpha, Complex beta, double r, double q);
ProtocolReport run_tp_ew_bell(Complex alpha, Complex beta, double r, double q);
ProtocolReport run_ctp_w(Complex alpha, Complex beta, double r);
ProtocolReport run_ctp_bell(Complex alpha, Complex beta, double r, double q_prime);
ProtocolReport run_original_w(Complex alpha, Complex beta, double r);
ProtocolReport run_original_bell(Complex alpha, Complex beta, double r);
ProtocolReport run_original_controlled(Entanglement entanglement, Complex alpha, Complex beta,
                                       double r);

/// Dispatches on `p`; `q` is ignored by protocols without a weak measurement.
/// Throws InvalidInput for kMr.
ProtocolReport run_protocol(Protocol p, Complex alpha, Complex beta, double r, double q);

}  // namespace eamtp
