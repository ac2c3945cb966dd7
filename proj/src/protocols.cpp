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

#include "eamtp/protocols.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::array<Protocol, 8> kConstructive = {
    Protocol::kTpEwW,     Protocol::kTpEwBell,     Protocol::kCtpW,         Protocol::kCtpBell,
    Protocol::kOriginalW, Protocol::kOriginalBell, Protocol::kOriginalCtpW, Protocol::kOriginalCtpBell};

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidInput(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

ProtocolReport blank_report(Protocol p, const Ket& input, double r, double q) {
  ProtocolReport rep{};
  rep.protocol = p;
  rep.alpha = input[0];
  rep.beta = input[1];
  rep.r = r;
  rep.q = q;
  return rep;
}

// Bob's correction after outcome i (1-based).
using Correction = std::function<ComplexMatrix(int)>;

// Alice measures `basis` on every qubit except the last (Bob's); Bob applies
// `correct(i)` and keeps the click. `total` covers input + shared qubits.
void measure_and_correct(ProtocolReport& rep, const ComplexMatrix& total,
                         const std::array<Ket, 4>& basis, std::string_view prefix,
                         const Ket& input, const Correction& correct) {
  const std::size_t n = basis[0].n_qubits() + 1;
  const std::vector<std::size_t> dims(n, 2);
  const std::array<std::size_t, 1> bob = {n - 1};

  rep.branches.clear();
  rep.conditional_success = 0.0;
  rep.mean_fidelity_for_input = 0.0;
  double weight = 0.0;
  for (int i = 1; i <= 4; ++i) {
    const ComplexMatrix phi = kron(basis[i - 1].projector(), identity2());
    const ComplexMatrix projected = matmul(matmul(phi, total), phi);
    const ComplexMatrix bob_state = partial_trace(projected, dims, bob);
    const ComplexMatrix m = correct(i);
    const ComplexMatrix kept = matmul(matmul(m, bob_state), dagger(m));

    BranchOutcome b{std::string(prefix) + std::to_string(i), bob_state.trace().real(),
                    kept.trace().real(), std::nullopt, kNaN};
    if (b.wm_success >= kZeroBranchThreshold) {
      b.output_state = DensityMatrix::from_unnormalized(kept);
      b.fidelity = fidelity(input, *b.output_state);
    }
    rep.conditional_success += b.wm_success;
    if (b.conditional_probability >= kZeroBranchThreshold) {
      rep.mean_fidelity_for_input += b.conditional_probability * b.fidelity;
      weight += b.conditional_probability;
    }
    rep.branches.push_back(std::move(b));
  }
  // The P_i sum to 1 only up to rounding.
  if (weight > 0.0) rep.mean_fidelity_for_input /= weight;
  rep.unconditional_success = rep.eam_probability * rep.conditional_success;
}

void mark_degenerate(ProtocolReport& rep, std::string_view prefix) {
  rep.degenerate = true;
  rep.eam_probability = 0.0;
  rep.conditional_success = kNaN;
  rep.unconditional_success = 0.0;
  rep.mean_fidelity_for_input = kNaN;
  rep.branches.clear();
  for (int i = 1; i <= 4; ++i) {
    rep.branches.push_back({std::string(prefix) + std::to_string(i), kNaN, kNaN, std::nullopt, kNaN});
  }
  rep.warnings.emplace_back("EAM branch has zero probability; the channel is degenerate");
}

Correction weak(double q, WeakVariant v) {
  return [q, v](int i) { return wm_operator(q, i, v).op; };
}

Correction unitary_only() {
  return [](int i) { return correction_unitary(i); };
}

void warn_strength(ProtocolReport& rep) {
  if (rep.q > rep.r) {
    rep.warnings.emplace_back("weak measurement strength exceeds the decay probability (q > r)");
  }
}

}  // namespace

std::string_view protocol_name(Protocol p) {
  switch (p) {
    case Protocol::kTpEwW: return "tp-ew-w";
    case Protocol::kTpEwBell: return "tp-ew-bell";
    case Protocol::kCtpW: return "ctp-w";
    case Protocol::kCtpBell: return "ctp-bell";
    case Protocol::kOriginalW: return "original-w";
    case Protocol::kOriginalBell: return "original-bell";
    case Protocol::kOriginalCtpW: return "original-cw";
    case Protocol::kOriginalCtpBell: return "original-cb";
    case Protocol::kMr: return "mr";
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  if (name == "tp-ew") return Protocol::kTpEwW;
  for (Protocol p : kConstructive) {
    if (protocol_name(p) == name) return p;
  }
  if (name == "mr") return Protocol::kMr;
  throw InvalidInput("unknown protocol '" + std::string(name) + "'");
}

std::span<const Protocol> constructive_protocols() { return kConstructive; }

bool has_constructive_pipeline(Protocol p) { return p != Protocol::kMr; }

bool uses_weak_measurement(Protocol p) {
  return p == Protocol::kTpEwW || p == Protocol::kTpEwBell || p == Protocol::kCtpBell;
}

Entanglement entanglement_of(Protocol p) {
  switch (p) {
    case Protocol::kTpEwW:
    case Protocol::kCtpW:
    case Protocol::kOriginalW:
    case Protocol::kOriginalCtpW:
      return Entanglement::kW;
    default:
      return Entanglement::kBell;
  }
}

ProtocolReport run_tp_ew_w(Complex alpha, Complex beta, double r, double q) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  check_unit(q, "q");
  ProtocolReport rep = blank_report(Protocol::kTpEwW, input, r, q);
  warn_strength(rep);

  const std::array<std::size_t, 1> bob = {2};
  const PostSelection shared = eam_select(lift(adc(r), bob, 3), w_state(), "e0");
  rep.eam_probability = shared.probability;
  const ComplexMatrix total = kron(input.projector(), shared.state.matrix());
  measure_and_correct(rep, total, eta_basis(), "eta", input, weak(q, WeakVariant::kSqrt));
  return rep;
}

ProtocolReport run_tp_ew_bell(Complex alpha, Complex beta, double r, double q) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  check_unit(q, "q");
  ProtocolReport rep = blank_report(Protocol::kTpEwBell, input, r, q);
  warn_strength(rep);

  const std::array<std::size_t, 1> bob = {1};
  const PostSelection shared = eam_select(lift(adc(r), bob, 2), bell_state(), "e0");
  rep.eam_probability = shared.probability;
  const DensityMatrix total = tensor(DensityMatrix::pure(input), shared.state);
  measure_and_correct(rep, total.matrix(), bell_basis(), "b", input, weak(q, WeakVariant::kSqrt));
  return rep;
}

ProtocolReport run_ctp_w(Complex alpha, Complex beta, double r) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  ProtocolReport rep = blank_report(Protocol::kCtpW, input, r, 0.0);

  const std::array<std::size_t, 3> all = {0, 1, 2};
  try {
    const PostSelection shared = eam_select(lift(adc(r), all, 3), w_state(), "e0,e0,e0");
    rep.eam_probability = shared.probability;
    const ComplexMatrix total = kron(input.projector(), shared.state.matrix());
    measure_and_correct(rep, total, eta_basis(), "eta", input, unitary_only());
  } catch (const ZeroProbabilityBranch&) {
    mark_degenerate(rep, "eta");
  }
  return rep;
}

ProtocolReport run_ctp_bell(Complex alpha, Complex beta, double r, double q_prime) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  check_unit(q_prime, "q'");
  ProtocolReport rep = blank_report(Protocol::kCtpBell, input, r, q_prime);
  warn_strength(rep);

  const std::array<std::size_t, 2> both = {0, 1};
  const PostSelection shared = eam_select(lift(adc(r), both, 2), bell_state(), "e0,e0");
  rep.eam_probability = shared.probability;
  const DensityMatrix total = tensor(DensityMatrix::pure(input), shared.state);
  measure_and_correct(rep, total.matrix(), bell_basis(), "b", input,
                      weak(q_prime, WeakVariant::kLinear));
  return rep;
}

ProtocolReport run_original_w(Complex alpha, Complex beta, double r) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  ProtocolReport rep = blank_report(Protocol::kOriginalW, input, r, 0.0);
  const std::array<std::size_t, 1> bob = {2};
  const DensityMatrix shared = apply_channel(lift(adc(r), bob, 3), DensityMatrix::pure(w_state()));
  rep.eam_probability = 1.0;
  const ComplexMatrix total = kron(input.projector(), shared.matrix());
  measure_and_correct(rep, total, eta_basis(), "eta", input, unitary_only());
  return rep;
}

ProtocolReport run_original_bell(Complex alpha, Complex beta, double r) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  ProtocolReport rep = blank_report(Protocol::kOriginalBell, input, r, 0.0);
  const std::array<std::size_t, 1> bob = {1};
  const DensityMatrix shared =
      apply_channel(lift(adc(r), bob, 2), DensityMatrix::pure(bell_state()));
  rep.eam_probability = 1.0;
  const ComplexMatrix total = kron(input.projector(), shared.matrix());
  measure_and_correct(rep, total, bell_basis(), "b", input, unitary_only());
  return rep;
}

ProtocolReport run_original_controlled(Entanglement entanglement, Complex alpha, Complex beta,
                                       double r) {
  const Ket input = input_state(alpha, beta);
  check_unit(r, "r");
  const bool w = entanglement == Entanglement::kW;
  ProtocolReport rep =
      blank_report(w ? Protocol::kOriginalCtpW : Protocol::kOriginalCtpBell, input, r, 0.0);
  const Ket shared_ket = w ? w_state() : bell_state();
  std::vector<std::size_t> all(shared_ket.n_qubits());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const DensityMatrix shared =
      apply_channel(lift(adc(r), all, shared_ket.n_qubits()), DensityMatrix::pure(shared_ket));
  rep.eam_probability = 1.0;
  const ComplexMatrix total = kron(input.projector(), shared.matrix());
  measure_and_correct(rep, total, w ? eta_basis() : bell_basis(), w ? "eta" : "b", input,
                      unitary_only());
  return rep;
}

ProtocolReport run_protocol(Protocol p, Complex alpha, Complex beta, double r, double q) {
  switch (p) {
    case Protocol::kTpEwW: return run_tp_ew_w(alpha, beta, r, q);
    case Protocol::kTpEwBell: return run_tp_ew_bell(alpha, beta, r, q);
    case Protocol::kCtpW: return run_ctp_w(alpha, beta, r);
    case Protocol::kCtpBell: return run_ctp_bell(alpha, beta, r, q);
    case Protocol::kOriginalW: return run_original_w(alpha, beta, r);
    case Protocol::kOriginalBell: return run_original_bell(alpha, beta, r);
    case Protocol::kOriginalCtpW: return run_original_controlled(Entanglement::kW, alpha, beta, r);
    case Protocol::kOriginalCtpBell:
      return run_original_controlled(Entanglement::kBell, alpha, beta, r);
    case Protocol::kMr: break;
  }
  throw InvalidInput("the MR baseline has closed forms only; no constructive pipeline");
}

}  // namespace eamtp
