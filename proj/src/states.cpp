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

#include "eamtp/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

std::size_t qubits_for_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw InvalidInput("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

Ket::Ket(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits == 0 || (std::size_t{1} << n_qubits) > kMaxDimension) {
    throw InvalidInput("ket must have between 1 and 4 qubits");
  }
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionMismatch("ket of " + std::to_string(n_qubits) + " qubits needs " +
                            std::to_string(std::size_t{1} << n_qubits) + " amplitudes");
  }
  const double n2 = squared_norm(amplitudes_);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw InvalidInput("ket is not normalized (|psi|^2 = " + std::to_string(n2) + ")");
  }
}

Ket Ket::normalized(std::size_t n_qubits, std::vector<Complex> amplitudes) {
  const double n2 = squared_norm(amplitudes);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw InvalidInput("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& z : amplitudes) z *= inv;
  return Ket(n_qubits, std::move(amplitudes));
}

ComplexMatrix Ket::projector() const { return ComplexMatrix::outer(amplitudes_, amplitudes_); }

Complex inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner product of kets of different size");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Ket tensor(const Ket& a, const Ket& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (const Complex& x : a.amplitudes()) {
    for (const Complex& y : b.amplitudes()) out.push_back(x * y);
  }
  return Ket::normalized(a.n_qubits() + b.n_qubits(), std::move(out));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : n_qubits_(0), matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionMismatch("density matrix must be square");
  n_qubits_ = qubits_for_dim(matrix_.rows());
  const double defect = matrix_.hermitian_defect();
  if (defect > kHermitianTolerance) {
    throw InvalidInput("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > kNormTolerance) {
    throw InvalidInput("density matrix trace is " + std::to_string(tr.real()));
  }
  const std::vector<double> eig = eig_hermitian(matrix_);
  if (eig.front() < -kPsdTolerance) {
    throw InvalidInput("density matrix has negative eigenvalue " + std::to_string(eig.front()));
  }
}

DensityMatrix DensityMatrix::from_unnormalized(const ComplexMatrix& matrix) {
  const double tr = matrix.trace().real();
  if (!(tr > 0.0)) throw InvalidInput("cannot normalize an operator with non-positive trace");
  ComplexMatrix m = matrix * Complex(1.0 / tr);
  // Remove the rounding asymmetry left by K rho K^dagger products.
  ComplexMatrix sym = (m + dagger(m)) * Complex(0.5);
  return DensityMatrix(std::move(sym));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_unnormalized(kron(a.matrix(), b.matrix()));
}

Ket input_state(Complex alpha, Complex beta) {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (!(n2 > 0.0)) throw InvalidInput("input amplitudes alpha = beta = 0");
  if (std::abs(n2 - 1.0) > kRenormalizeTolerance) {
    throw InvalidInput("|alpha|^2 + |beta|^2 = " + std::to_string(n2) + " is not 1");
  }
  return Ket::normalized(1, {alpha, beta});
}

Ket input_from_population(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("population |alpha|^2 must lie in [0, 1]");
  return Ket::normalized(1, {std::sqrt(x), std::sqrt(1.0 - x)});
}

Ket w_state(double n, double gamma, double delta) {
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("W-state weight n must be positive");
  const double norm = 1.0 / std::sqrt(2.0 + 2.0 * n);
  std::vector<Complex> amp(8);
  amp[0b100] = norm;
  amp[0b010] = norm * std::sqrt(n) * std::polar(1.0, gamma);
  amp[0b001] = norm * std::sqrt(n + 1.0) * std::polar(1.0, delta);
  return Ket::normalized(3, std::move(amp));
}

Ket bell_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return Ket(2, {h, 0.0, 0.0, h});
}

const std::array<Ket, 4>& eta_basis() {
  static const std::array<Ket, 4> basis = [] {
    const double s = std::sqrt(2.0);
    auto make = [](std::size_t a, std::size_t b, std::size_t c, double weight) {
      std::vector<Complex> amp(8);
      amp[a] = 0.5;
      amp[b] = 0.5;
      amp[c] = 0.5 * weight;
      return Ket::normalized(3, std::move(amp));
    };
    return std::array<Ket, 4>{make(0b010, 0b001, 0b100, s), make(0b010, 0b001, 0b100, -s),
                              make(0b110, 0b101, 0b000, s), make(0b110, 0b101, 0b000, -s)};
  }();
  return basis;
}

const std::array<Ket, 4>& bell_basis() {
  static const std::array<Ket, 4> basis = [] {
    const double h = 1.0 / std::sqrt(2.0);
    return std::array<Ket, 4>{Ket(2, {h, 0, 0, h}), Ket(2, {h, 0, 0, -h}), Ket(2, {0, h, h, 0}),
                              Ket(2, {0, h, -h, 0})};
  }();
  return basis;
}

double fidelity(const Ket& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) throw DimensionMismatch("fidelity of mismatched dimensions");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < psi.dim(); ++j) row += rho.matrix()(i, j) * psi[j];
    acc += std::conj(psi[i]) * row;
  }
  return std::clamp(acc.real(), 0.0, 1.0);
}

}  // namespace eamtp
