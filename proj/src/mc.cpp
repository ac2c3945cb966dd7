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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "eamtp/error.hpp"
#include "eamtp/random.hpp"

// The trajectory engine deliberately shares no code with the density-matrix
// pipelines: states, bases and operators are written out here as kets.

namespace eamtp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHalfRoot2 = std::numbers::sqrt2 / 2.0;

enum class Correction { kUnitary, kSqrtWeak, kLinearWeak };

struct Layout {
  int shared_qubits;             // Bob holds the last one
  std::array<Complex, 8> shared;
  std::array<int, 3> damped;     // shared-register positions hit by the ADC
  int n_damped;
  bool post_select;              // keep only the no-jump EAM branch
  Correction correction;
  bool w_basis;                  // eta basis on 3 qubits, otherwise Bell on 2
};

Layout layout_of(Protocol p) {
  const std::array<Complex, 8> w = {0.0, kHalfRoot2, 0.5, 0.0, 0.5, 0.0, 0.0, 0.0};
  const std::array<Complex, 8> bell = {kHalfRoot2, 0.0, 0.0, kHalfRoot2, 0.0, 0.0, 0.0, 0.0};
  switch (p) {
    case Protocol::kTpEwW: return {3, w, {2, 0, 0}, 1, true, Correction::kSqrtWeak, true};
    case Protocol::kTpEwBell: return {2, bell, {1, 0, 0}, 1, true, Correction::kSqrtWeak, false};
    case Protocol::kCtpW: return {3, w, {0, 1, 2}, 3, true, Correction::kUnitary, true};
    case Protocol::kCtpBell: return {2, bell, {0, 1, 0}, 2, true, Correction::kLinearWeak, false};
    case Protocol::kOriginalW: return {3, w, {2, 0, 0}, 1, false, Correction::kUnitary, true};
    case Protocol::kOriginalBell: return {2, bell, {1, 0, 0}, 1, false, Correction::kUnitary, false};
    case Protocol::kOriginalCtpW: return {3, w, {0, 1, 2}, 3, false, Correction::kUnitary, true};
    case Protocol::kOriginalCtpBell:
      return {2, bell, {0, 1, 0}, 2, false, Correction::kUnitary, false};
    case Protocol::kMr: break;
  }
  throw InvalidInput("no trajectory model for protocol '" + std::string(protocol_name(p)) + "'");
}

// Real basis vectors on Alice's qubits (input first).
using Basis = std::array<std::array<double, 8>, 4>;

constexpr Basis kEta = {{
    {0.0, 0.5, 0.5, 0.0, kHalfRoot2, 0.0, 0.0, 0.0},
    {0.0, 0.5, 0.5, 0.0, -kHalfRoot2, 0.0, 0.0, 0.0},
    {kHalfRoot2, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 0.0},
    {-kHalfRoot2, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 0.0},
}};

constexpr Basis kBell = {{
    {kHalfRoot2, 0.0, 0.0, kHalfRoot2},
    {kHalfRoot2, 0.0, 0.0, -kHalfRoot2},
    {0.0, kHalfRoot2, kHalfRoot2, 0.0},
    {0.0, kHalfRoot2, -kHalfRoot2, 0.0},
}};

// Welford accumulator with Chan's merge.
struct Moments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double d = o.mean - mean;
    const std::size_t total = n + o.n;
    mean += d * nb / static_cast<double>(total);
    m2 += o.m2 + d * d * na * nb / static_cast<double>(total);
    n = total;
  }
};

enum Slot : std::size_t {
  kEam,
  kConditional,
  kUnconditional,
  kBranch1,
  kAverage = kBranch1 + 4,
  kFidelity1,
  kSlots = kFidelity1 + 4,
};

using Block = std::array<Moments, kSlots>;

struct Engine {
  Layout lay;
  CounterRng rng;
  bool fixed_input;
  Complex alpha;
  Complex beta;
  double sqrt_keep;  // sqrt(1 - r)
  double sqrt_jump;  // sqrt(r)
  double r;
  double d0;         // weak-measurement weight on |0>
  bool amplitude_measure;

  void run(std::uint64_t t, Block& acc) const {
    StreamCursor cur(rng, t);
    Complex a = alpha;
    Complex b = beta;
    if (!fixed_input) {
      const double u = cur.uniform();
      const double x = amplitude_measure ? u * u : u;
      a = std::sqrt(x);
      b = std::polar(std::sqrt(1.0 - x), 2.0 * std::numbers::pi * cur.uniform());
    }

    const int ns = lay.shared_qubits;
    const int dim = 1 << ns;
    std::array<Complex, 8> sh = lay.shared;
    for (int k = 0; k < lay.n_damped; ++k) {
      const int stride = 1 << (ns - 1 - lay.damped[k]);
      double ground = 0.0;
      double excited = 0.0;
      for (int s = 0; s < dim; ++s) ((s & stride) ? excited : ground) += std::norm(sh[s]);
      const double p_keep = ground + (1.0 - r) * excited;
      const double p_jump = r * excited;
      const bool jump = cur.uniform() * (p_keep + p_jump) >= p_keep;
      if (jump && lay.post_select) {
        acc[kEam].add(0.0);
        acc[kUnconditional].add(0.0);
        return;
      }
      if (jump) {
        const double scale = sqrt_jump / std::sqrt(p_jump);
        for (int s = 0; s < dim; ++s) {
          if (s & stride) {
            sh[s ^ stride] = sh[s] * scale;
            sh[s] = 0.0;
          }
        }
      } else {
        const double scale = 1.0 / std::sqrt(p_keep);
        for (int s = 0; s < dim; ++s) sh[s] *= (s & stride) ? sqrt_keep * scale : scale;
      }
    }
    acc[kEam].add(1.0);

    // Alice's qubits are the input and every shared qubit but Bob's.
    const Basis& basis = lay.w_basis ? kEta : kBell;
    const int half = dim >> 1;
    std::array<std::array<Complex, 2>, 4> bob{};
    std::array<double, 4> p{};
    double p_sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int bit = 0; bit < 2; ++bit) {
        Complex c = 0.0;
        for (int s = 0; s < half; ++s) {
          const Complex amp = sh[(s << 1) | bit];
          c += basis[i][s] * a * amp + basis[i][half + s] * b * amp;
        }
        bob[i][bit] = c;
      }
      p[i] = std::norm(bob[i][0]) + std::norm(bob[i][1]);
      p_sum += p[i];
    }
    const double u = cur.uniform() * p_sum;
    int i = 0;
    for (double edge = p[0]; i < 3 && u >= edge; edge += p[++i]) {
    }
    for (int k = 0; k < 4; ++k) acc[kBranch1 + k].add(k == i ? 1.0 : 0.0);

    const double inv = 1.0 / std::sqrt(p[i]);
    const Complex f0 = bob[i][0] * inv;
    const Complex f1 = bob[i][1] * inv;
    Complex o0;
    Complex o1;
    switch (i) {
      case 0: o0 = d0 * f0; o1 = f1; break;
      case 1: o0 = d0 * f0; o1 = -f1; break;
      case 2: o0 = f1; o1 = d0 * f0; break;
      default: o0 = -f1; o1 = d0 * f0; break;
    }
    const double p_click = std::norm(o0) + std::norm(o1);
    const bool click = lay.correction == Correction::kUnitary || cur.uniform() < p_click;
    acc[kConditional].add(click ? 1.0 : 0.0);
    acc[kUnconditional].add(click ? 1.0 : 0.0);
    if (!click) {
      acc[kAverage].add(0.0);
      return;
    }
    const double fid = std::norm(std::conj(a) * o0 + std::conj(b) * o1) / p_click;
    acc[kAverage].add(fid / p_click);
    if (fixed_input) acc[kFidelity1 + i].add(fid);
  }
};

McEstimate finish(const Moments& m, std::size_t n_total) {
  McEstimate e;
  e.n_accepted = m.n;
  e.n_total = n_total;
  if (m.n == 0) {
    e.mean = kNaN;
    e.standard_error = kNaN;
    return e;
  }
  e.mean = m.mean;
  const double var = m.n > 1 ? std::max(0.0, m.m2 / static_cast<double>(m.n - 1)) : 0.0;
  e.standard_error = std::sqrt(var / static_cast<double>(m.n));
  return e;
}

}  // namespace

void TrajectoryConfig::validate() const {
  if (n_trajectories < 1) throw InvalidInput("n_trajectories must be at least 1");
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidInput("r must lie in [0, 1]");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("q must lie in [0, 1]");
  if (alpha.has_value() != beta.has_value()) {
    throw InvalidInput("alpha and beta must be given together");
  }
  if (protocol == Protocol::kMr) throw InvalidInput("the MR baseline has no trajectory model");
}

std::map<std::string, McEstimate> run_trajectories(const TrajectoryConfig& config) {
  config.validate();
  Engine eng{layout_of(config.protocol),
             CounterRng(config.seed),
             config.alpha.has_value(),
             0.0,
             0.0,
             std::sqrt(1.0 - config.r),
             std::sqrt(config.r),
             config.r,
             1.0,
             config.measure == InputMeasure::kAmplitude};
  if (eng.fixed_input) {
    const Ket in = input_state(*config.alpha, *config.beta);
    eng.alpha = in[0];
    eng.beta = in[1];
  }
  if (eng.lay.correction == Correction::kSqrtWeak) eng.d0 = std::sqrt(1.0 - config.q);
  if (eng.lay.correction == Correction::kLinearWeak) eng.d0 = 1.0 - config.q;

  const std::size_t n = config.n_trajectories;
  const std::size_t n_blocks = (n + kTrajectoryBlock - 1) / kTrajectoryBlock;
  std::vector<Block> blocks(n_blocks);
  auto run_block = [&](std::size_t k) {
    const std::size_t end = std::min(n, (k + 1) * kTrajectoryBlock);
    for (std::size_t t = k * kTrajectoryBlock; t < end; ++t) eng.run(t, blocks[k]);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, n_blocks));
  if (workers == 1) {
    for (std::size_t k = 0; k < n_blocks; ++k) run_block(k);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < n_blocks; k += workers) run_block(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  Block total;
  for (const Block& blk : blocks) {
    for (std::size_t s = 0; s < kSlots; ++s) total[s].merge(blk[s]);
  }

  std::map<std::string, McEstimate> out;
  out["eam_probability"] = finish(total[kEam], n);
  out["conditional_success"] = finish(total[kConditional], n);
  out["unconditional_success"] = finish(total[kUnconditional], n);
  out["average_fidelity"] = finish(total[kAverage], n);
  for (int k = 0; k < 4; ++k) {
    const std::string idx = std::to_string(k + 1);
    out["branch_probability_" + idx] = finish(total[kBranch1 + k], n);
    if (eng.fixed_input) out["branch_fidelity_" + idx] = finish(total[kFidelity1 + k], n);
  }
  return out;
}

double phase_independence_probe(Protocol p, double r, double q, std::size_t n_phases, double x,
                                std::uint64_t seed) {
  if (!has_constructive_pipeline(p)) return 0.0;
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("x must lie in [0, 1]");
  const double a = std::sqrt(x);
  const double b = std::sqrt(1.0 - x);
  const ProtocolReport ref = run_protocol(p, a, b, r, q);
  if (ref.degenerate) return 0.0;
  const CounterRng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < n_phases; ++k) {
    StreamCursor cur(rng, k);
    const Complex gb = std::polar(b, 2.0 * std::numbers::pi * cur.uniform());
    const ProtocolReport rep = run_protocol(p, a, gb, r, q);
    worst = std::max(worst, std::abs(rep.mean_fidelity_for_input - ref.mean_fidelity_for_input));
    for (std::size_t i = 0; i < rep.branches.size(); ++i) {
      const double f = rep.branches[i].fidelity;
      const double f0 = ref.branches[i].fidelity;
      if (std::isnan(f) && std::isnan(f0)) continue;
      worst = std::max(worst, std::abs(f - f0));
    }
  }
  return worst;
}

}  // namespace eamtp
