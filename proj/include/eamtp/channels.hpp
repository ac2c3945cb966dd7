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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eamtp/linalg.hpp"
#include "eamtp/states.hpp"

namespace eamtp {

/// Tolerance on sum_i K_i^dagger K_i = I.
inline constexpr double kCompletenessTolerance = 1e-12;
/// Post-selected branches below this probability are structurally impossible.
inline constexpr double kZeroBranchThreshold = 1e-15;

/// Operator-sum representation rho -> sum_i K_i rho K_i^dagger. Every
/// operator carries a label used to select branches after an environment
/// measurement.
class KrausChannel {
 public:
  /// Rejects empty, ragged, unlabeled or incomplete operator sets.
  KrausChannel(std::vector<ComplexMatrix> operators, std::vector<std::string> labels);

  std::size_t dim() const { return operators_.front().rows(); }
  std::size_t size() const { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Operator registered under `label`; throws InvalidInput for unknown labels.
  const ComplexMatrix& op(std::string_view label) const;

  /// max |sum_i K_i^dagger K_i - I|
  double completeness_defect() const;

 private:
  std::vector<ComplexMatrix> operators_;
  std::vector<std::string> labels_;
};

/// Amplitude damping with decay probability r: e0 = diag(1, sqrt(1-r)),
/// e1 = sqrt(r)|0><1|. Labels "e0", "e1".
KrausChannel adc(double r);

/// Decay probability after time t at relaxation rate gamma: 1 - exp(-gamma t).
double decay_probability(double gamma, double t);

/// Applies `channel` independently to each qubit in `targets` of an
/// n-qubit register; identity elsewhere. Operators enumerate every
/// combination with the lowest target as the slowest-varying index, so the
/// all-"e0" operator comes first. Labels join the per-target labels with
/// commas in ascending target order, e.g. "e0,e1,e0".
KrausChannel lift(const KrausChannel& channel, std::span<const std::size_t> targets,
                  std::size_t n_qubits);

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho);

/// Result of keeping a single environment outcome.
struct PostSelection {
  DensityMatrix state;  ///< K rho K^dagger / p
  double probability;   ///< p = Tr(K rho K^dagger)
};

/// Post-selects the branch named `label`. Throws ZeroProbabilityBranch if
/// its probability is below kZeroBranchThreshold.
PostSelection eam_select(const KrausChannel& channel, const DensityMatrix& rho,
                         std::string_view label);
PostSelection eam_select(const KrausChannel& channel, const Ket& psi, std::string_view label);

/// Probability of every branch of `channel` on `rho`, in operator order.
std::vector<double> branch_probabilities(const KrausChannel& channel, const DensityMatrix& rho);

/// Weak-measurement reversal R = N k^{-1}, N = min sqrt(eig(k k^dagger)).
/// Throws NotInvertible for singular k.
ComplexMatrix wm_reversal(const ComplexMatrix& k);

/// Normalization N = min sqrt(eig(k k^dagger)) used by wm_reversal.
double reversal_normalization(const ComplexMatrix& k);

enum class WeakVariant {
  kSqrt,    ///< diag(sqrt(1-q), 1)
  kLinear,  ///< diag(1-q, 1)
};

/// Bob's conditioned weak measurement U_i * D(q).
struct WeakMeasurement {
  double strength;
  ComplexMatrix conditioning_unitary;
  ComplexMatrix op;

  /// Complementary element sqrt(I - op^dagger op) is implied; this is the
  /// probability of keeping the click on `rho`.
  double click_probability(const ComplexMatrix& rho) const;
};

/// Correction unitary after Alice's outcome i in 1..4: I, Z, X, X*Z.
const ComplexMatrix& correction_unitary(int branch_index);

WeakMeasurement wm_operator(double q, int branch_index, WeakVariant variant);

/// F_i = sum_j v_ij K_j. v must be unitary with side equal to the operator
/// count. Labels become "f0", "f1", ...
KrausChannel transform_kraus(const KrausChannel& channel, const ComplexMatrix& v);

/// [[cos d, -sin d], [sin d, cos d]]
ComplexMatrix rotation_family(double delta);

/// General U(2) element with phases (a, b, g) and mixing angle d.
ComplexMatrix unitary_family(double a, double b, double g, double d);

/// Sum of N_i^2 over invertible operators; singular ones contribute 0.
double recoverable_probability(const KrausChannel& channel);

}  // namespace eamtp
