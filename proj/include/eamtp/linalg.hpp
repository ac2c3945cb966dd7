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

// Dense complex matrices sized for registers of up to four qubits.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eamtp {

using Complex = std::complex<double>;

/// Largest supported row or column count (four qubits).
inline constexpr std::size_t kMaxDimension = 16;

/// |det| below this is treated as singular.
inline constexpr double kSingularityThreshold = 1e-12;

/// Absolute tolerance on max |A - A^dagger| for Hermitian inputs.
inline constexpr double kHermitianTolerance = 1e-12;

/// Row-major dense complex matrix. Values are immutable once built except
/// through the explicit element accessor used by the library's builders.
class ComplexMatrix {
 public:
  /// rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of `entries` (row-major). Rejects wrong lengths and
  /// non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Nested-list constructor, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// Column vector (n x 1).
  static ComplexMatrix column(std::span<const Complex> values);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Complex scalar) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);

  Complex trace() const;
  /// Largest |a_ij - b_ij|; shapes must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  /// Largest |a_ij - conj(a_ji)|.
  double hermitian_defect() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; `a` is the most significant subsystem.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);

/// Reduced matrix over the subsystems in `keep` (ascending order of index),
/// tracing out the rest. `dims` lists subsystem dimensions, most significant
/// first.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Real eigenvalues of a Hermitian matrix, ascending. 2x2 uses the closed
/// form; larger matrices use cyclic complex Jacobi rotations.
std::vector<double> eig_hermitian(const ComplexMatrix& a);

/// Throws NotInvertible when |det| < kSingularityThreshold.
ComplexMatrix inverse_2x2(const ComplexMatrix& a);

/// Determinant of a 2x2 matrix.
Complex det_2x2(const ComplexMatrix& a);

/// v^dagger v == I within `tol`.
bool is_unitary(const ComplexMatrix& v, double tol = 1e-12);

// Pauli matrices and the 2x2 identity.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

}  // namespace eamtp
