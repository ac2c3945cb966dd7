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

#include <gtest/gtest.h>

#include <cmath>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

const Complex kA = std::sqrt(0.3);
const Complex kB = std::polar(std::sqrt(0.7), 1.1);

TEST(Protocols, Names) {
  EXPECT_EQ(parse_protocol("tp-ew"), Protocol::kTpEwW);
  for (Protocol p : constructive_protocols()) EXPECT_EQ(parse_protocol(protocol_name(p)), p);
  EXPECT_EQ(parse_protocol("mr"), Protocol::kMr);
  EXPECT_THROW(parse_protocol("teleport"), InvalidInput);
  EXPECT_THROW(run_protocol(Protocol::kMr, kA, kB, 0.1, 0.1), InvalidInput);
}

TEST(TpEw, NoiselessIsPerfect) {
  const ProtocolReport rep = run_tp_ew_w(std::sqrt(0.5), std::sqrt(0.5), 0.0, 0.0);
  EXPECT_NEAR(rep.eam_probability, 1.0, 1e-15);
  for (const auto& b : rep.branches) {
    EXPECT_NEAR(b.conditional_probability, 0.25, 1e-15);
    EXPECT_NEAR(b.fidelity, 1.0, 1e-14);
  }
  EXPECT_NEAR(rep.conditional_success, 1.0, 1e-14);
}

TEST(TpEw, HalfDamping) {
  const ProtocolReport rep = run_tp_ew_w(kA, kB, 0.5, 0.5);
  EXPECT_NEAR(rep.eam_probability, 0.75, 1e-15);
  EXPECT_NEAR(rep.conditional_success, 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(rep.unconditional_success, 0.5, 1e-14);
  EXPECT_NEAR(rep.mean_fidelity_for_input, 1.0, 1e-14);
  // P_1 = (1 - 0.7 * 0.5) / 3
  EXPECT_NEAR(rep.branches[0].conditional_probability, 0.65 / 3.0, 1e-15);
  EXPECT_EQ(rep.branches[2].label, "eta3");
  EXPECT_TRUE(rep.warnings.empty());
}

TEST(TpEw, WarnsWhenStrengthExceedsDecay) {
  const ProtocolReport rep = run_tp_ew_w(kA, kB, 0.2, 0.6);
  EXPECT_FALSE(rep.warnings.empty());
}

TEST(TpEw, RejectsOutOfDomain) {
  EXPECT_THROW(run_tp_ew_w(kA, kB, -0.1, 0.0), InvalidInput);
  EXPECT_THROW(run_tp_ew_bell(kA, kB, 0.1, 1.5), InvalidInput);
  EXPECT_THROW(run_tp_ew_w(1.0, 1.0, 0.1, 0.1), InvalidInput);
}

TEST(CtpW, AcceptanceAndPerfectFidelity) {
  const ProtocolReport rep = run_ctp_w(kA, kB, 0.4);
  EXPECT_NEAR(rep.eam_probability, 0.6, 1e-15);
  EXPECT_NEAR(rep.conditional_success, 1.0, 1e-14);
  for (const auto& b : rep.branches) {
    EXPECT_NEAR(b.conditional_probability, 0.25, 1e-14);
    EXPECT_NEAR(b.fidelity, 1.0, 1e-14);
  }
}

TEST(CtpW, FullDampingIsDegenerate) {
  const ProtocolReport rep = run_ctp_w(kA, kB, 1.0);
  EXPECT_TRUE(rep.degenerate);
  EXPECT_EQ(rep.eam_probability, 0.0);
  EXPECT_TRUE(std::isnan(rep.mean_fidelity_for_input));
  EXPECT_FALSE(rep.warnings.empty());
}

TEST(CtpBell, SpotValue) {
  const ProtocolReport rep = run_ctp_bell(kA, kB, 0.5, 0.5);
  EXPECT_NEAR(rep.eam_probability, 0.625, 1e-15);
  EXPECT_NEAR(rep.conditional_success, 0.4, 1e-14);
  EXPECT_NEAR(rep.mean_fidelity_for_input, 1.0, 1e-14);
}

TEST(Original, BranchFidelity) {
  // x^2 + y^2 (1 - r) + x y (r + 2 sqrt(1 - r)) at x = 0.3, r = 0.5.
  const double x = 0.3;
  const double y = 0.7;
  const double want = x * x + y * y * 0.5 + x * y * (0.5 + 2.0 * std::sqrt(0.5));
  const ProtocolReport w = run_original_w(kA, kB, 0.5);
  const ProtocolReport b = run_original_bell(kA, kB, 0.5);
  EXPECT_NEAR(w.branches[0].fidelity, want, 1e-14);
  EXPECT_NEAR(b.branches[1].fidelity, want, 1e-14);
  EXPECT_NEAR(w.eam_probability, 1.0, 0.0);
}

TEST(Original, ControlledFullDamping) {
  // With every qubit fully damped nothing of the input survives.
  const ProtocolReport w = run_original_controlled(Entanglement::kW, kA, kB, 1.0);
  const ProtocolReport b = run_original_controlled(Entanglement::kBell, kA, kB, 1.0);
  EXPECT_EQ(w.protocol, Protocol::kOriginalCtpW);
  EXPECT_EQ(b.protocol, Protocol::kOriginalCtpBell);
  double total = 0.0;
  for (const auto& br : w.branches) total += br.conditional_probability;
  EXPECT_NEAR(total, 1.0, 1e-14);
}

}  // namespace
}  // namespace eamtp
