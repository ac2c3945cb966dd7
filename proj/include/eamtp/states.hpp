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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "eamtp/linalg.hpp"

namespace eamtp {

/// Normalization tolerance enforced on every Ket.
inline constexpr double kNormTolerance = 1e-12;
/// Inputs off by at most this much in squared norm are silently renormalized.
inline constexpr double kRenormalizeTolerance = 1e-6;
/// Smallest eigenvalue accepted as positive semidefinite.
inline constexpr double kPsdTolerance = 1e-10;

/// Pure state of `n_qubits` qubits. The first qubit is the most significant
/// bit of the amplitude index (|q1 q2 ... qn>).
class Ket {
 public:
  /// Rejects amplitude vectors that are not length 2^n or not unit norm.
  Ket(std::size_t n_qubits, std::vector<Complex> amplitudes);

  /// Scales `amplitudes` to unit norm; rejects the zero vector.
  static Ket normalized(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  ComplexMatrix projector() const;

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// <a|b>
Complex inner(const Ket& a, const Ket& b);

/// Tensor product, `a` most significant.
Ket tensor(const Ket& a, const Ket& b);

/// Physical density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates all three physicality conditions.
  explicit DensityMatrix(ComplexMatrix matrix);

  /// Divides a positive operator by its trace, then validates.
  static DensityMatrix from_unnormalized(const ComplexMatrix& matrix);

  static DensityMatrix pure(const Ket& ket) { return DensityMatrix(ket.projector()); }

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t n_qubits_;
  ComplexMatrix matrix_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// alpha|0> + beta|1>. Norm violations up to kRenormalizeTolerance are fixed,
/// larger ones rejected.
Ket input_state(Complex alpha, Complex beta);

/// Input parameterized by population x = |alpha|^2 with zero phases.
Ket input_from_population(double x);

/// (|100> + sqrt(n) e^{i gamma}|010> + sqrt(n+1) e^{i delta}|001>) / sqrt(2+2n)
Ket w_state(double n = 1.0, double gamma = 0.0, double delta = 0.0);

/// (|00> + |11>) / sqrt(2)
Ket bell_state();

/// The four orthonormal three-qubit kets Alice measures in the W protocols.
const std::array<Ket, 4>& eta_basis();

/// The Bell basis b1..b4: Phi+, Phi-, Psi+, Psi-.
const std::array<Ket, 4>& bell_basis();

/// <psi| rho |psi>, clamped to [0, 1] after rounding.
double fidelity(const Ket& psi, const DensityMatrix& rho);

}  // namespace eamtp
