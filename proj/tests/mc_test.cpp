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

#include "eamtp/mc.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "eamtp/error.hpp"
#include "eamtp/random.hpp"

namespace eamtp {
namespace {

TrajectoryConfig fixed_config(Protocol p, double r, double q, std::size_t n) {
  TrajectoryConfig c;
  c.seed = 7;
  c.n_trajectories = n;
  c.protocol = p;
  c.r = r;
  c.q = q;
  c.alpha = std::sqrt(0.3);
  c.beta = std::polar(std::sqrt(0.7), 0.7);
  return c;
}

bool within(const McEstimate& e, double want) {
  return std::abs(e.mean - want) <= 5.0 * e.standard_error + 1e-12;
}

TEST(CounterRng, KnownStreamAndRange) {
  // splitmix64 finalizer of 0 is 0; of the golden ratio increment it is the
  // first output of the reference splitmix64 seeded with 0.
  EXPECT_EQ(CounterRng::mix(0), 0u);
  EXPECT_EQ(CounterRng::mix(CounterRng::kGolden), 0xE220A8397B1DCDAFull);
  const CounterRng rng(42);
  double lo = 1.0;
  double hi = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const double u = rng.uniform(s, 3);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NE(rng.bits(0, 0), CounterRng(43).bits(0, 0));
  StreamCursor cur(rng, 5);
  for (std::uint64_t d = 0; d < CounterRng::kDrawsPerStream; ++d) cur.uniform();
  EXPECT_THROW(cur.uniform(), std::logic_error);
}

TEST(Trajectories, TpEwSuccessExample) {
  const auto est = run_trajectories(fixed_config(Protocol::kTpEwW, 0.5, 0.5, 200000));
  EXPECT_TRUE(within(est.at("conditional_success"), 2.0 / 3.0));
  EXPECT_TRUE(within(est.at("eam_probability"), 0.75));
  EXPECT_TRUE(within(est.at("unconditional_success"), 0.5));
  EXPECT_NEAR(est.at("average_fidelity").mean, 1.0, 0.02);
  EXPECT_EQ(est.at("eam_probability").n_total, 200000u);
  EXPECT_LE(est.at("conditional_success").n_accepted, 200000u);
}

TEST(Trajectories, NoiselessIsExact) {
  const auto est = run_trajectories(fixed_config(Protocol::kTpEwBell, 0.0, 0.0, 10000));
  EXPECT_EQ(est.at("eam_probability").mean, 1.0);
  EXPECT_EQ(est.at("conditional_success").mean, 1.0);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_NEAR(est.at("branch_fidelity_" + std::to_string(i)).mean, 1.0, 1e-14);
  }
}

TEST(Trajectories, CtpWAcceptance) {
  const auto est = run_trajectories(fixed_config(Protocol::kCtpW, 0.5, 0.0, 200000));
  EXPECT_TRUE(within(est.at("eam_probability"), 0.5));
  for (int i = 1; i <= 4; ++i) {
    const McEstimate& f = est.at("branch_fidelity_" + std::to_string(i));
    EXPECT_NEAR(f.mean, 1.0, 1e-14);
    EXPECT_NEAR(f.standard_error, 0.0, 1e-14);
  }
}

TEST(Trajectories, MatchesConstructiveForEveryProtocol) {
  for (Protocol p : constructive_protocols()) {
    const TrajectoryConfig c = fixed_config(p, 0.6, 0.4, 100000);
    const auto est = run_trajectories(c);
    const ProtocolReport rep = run_protocol(p, *c.alpha, *c.beta, c.r, c.q);
    EXPECT_TRUE(within(est.at("eam_probability"), rep.eam_probability)) << protocol_name(p);
    EXPECT_TRUE(within(est.at("conditional_success"), rep.conditional_success)) << protocol_name(p);
    EXPECT_TRUE(within(est.at("average_fidelity"), rep.mean_fidelity_for_input)) << protocol_name(p);
    for (int i = 1; i <= 4; ++i) {
      const std::string k = std::to_string(i);
      EXPECT_TRUE(within(est.at("branch_probability_" + k),
                         rep.branches[i - 1].conditional_probability))
          << protocol_name(p) << " branch " << k;
      EXPECT_TRUE(within(est.at("branch_fidelity_" + k), rep.branches[i - 1].fidelity))
          << protocol_name(p) << " branch " << k;
    }
  }
}

TEST(Trajectories, ReproducibleAcrossWorkers) {
  TrajectoryConfig c = fixed_config(Protocol::kCtpBell, 0.3, 0.2, 150000);
  c.alpha.reset();
  c.beta.reset();
  const auto a = run_trajectories(c);
  c.workers = 3;
  const auto b = run_trajectories(c);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.count("branch_fidelity_1"), 0u);
  for (const auto& [k, e] : a) {
    EXPECT_EQ(e.mean, b.at(k).mean) << k;
    EXPECT_EQ(e.standard_error, b.at(k).standard_error) << k;
    EXPECT_EQ(e.n_accepted, b.at(k).n_accepted) << k;
  }
}

TEST(Trajectories, RejectsBadConfig) {
  TrajectoryConfig c;
  c.n_trajectories = 0;
  EXPECT_THROW(run_trajectories(c), InvalidInput);
  c.n_trajectories = 10;
  c.protocol = Protocol::kMr;
  EXPECT_THROW(run_trajectories(c), InvalidInput);
  c.protocol = Protocol::kTpEwW;
  c.alpha = 1.0;
  EXPECT_THROW(run_trajectories(c), InvalidInput);
}

TEST(PhaseProbe, Examples) {
  for (Protocol p : constructive_protocols()) {
    EXPECT_LT(phase_independence_probe(p, 0.4, 0.3, 100), 1e-10) << protocol_name(p);
  }
  EXPECT_LT(phase_independence_probe(Protocol::kTpEwW, 0.9, 0.9, 100), 1e-10);
  // beta = 0: the phase is global.
  EXPECT_EQ(phase_independence_probe(Protocol::kTpEwW, 0.5, 0.2, 50, 1.0), 0.0);
  EXPECT_EQ(phase_independence_probe(Protocol::kMr, 0.5, 0.2, 50), 0.0);
}

}  // namespace
}  // namespace eamtp
