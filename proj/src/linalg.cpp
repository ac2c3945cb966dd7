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

#include "eamtp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw InvalidInput("matrix dimensions must be positive");
  }
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw InvalidInput("matrix dimension " + std::to_string(std::max(rows, cols)) +
                       " exceeds the supported maximum of " + std::to_string(kMaxDimension));
  }
}

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  check_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_shape(rows, cols);
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidInput("matrix entries must be finite");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  check_shape(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("ragged initializer list");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidInput("matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
  return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  ComplexMatrix out = *this;
  out += other;
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("cannot add " + shape(*this) + " and " + shape(other));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  return *this + other * Complex(-1.0);
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out = *this;
  for (Complex& z : out.data_) z *= scalar;
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square " + shape(*this));
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("cannot compare " + shape(*this) + " and " + shape(other));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

double ComplexMatrix::hermitian_defect() const {
  if (!is_square()) throw DimensionMismatch("hermiticity of non-square " + shape(*this));
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (!rho.is_square()) throw DimensionMismatch("partial trace of non-square " + shape(rho));
  if (dims.empty()) throw InvalidInput("partial trace needs at least one subsystem");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != rho.rows()) {
    throw DimensionMismatch("subsystem dimensions multiply to " + std::to_string(total) +
                            " but matrix is " + shape(rho));
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw InvalidInput("kept subsystem index out of range");
    if (kept[k]) throw InvalidInput("kept subsystem listed twice");
    kept[k] = true;
  }

  // Row-major strides: subsystem 0 is most significant.
  std::vector<std::size_t> stride(dims.size());
  std::size_t s = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    stride[i] = s;
    s *= dims[i];
  }
  std::vector<std::size_t> kept_idx, traced_idx;
  for (std::size_t i = 0; i < dims.size(); ++i) (kept[i] ? kept_idx : traced_idx).push_back(i);

  auto offsets = [&](const std::vector<std::size_t>& subsystems) {
    std::vector<std::size_t> out{0};
    for (std::size_t sub : subsystems) {
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[sub]);
      for (std::size_t base : out) {
        for (std::size_t d = 0; d < dims[sub]; ++d) next.push_back(base + d * stride[sub]);
      }
      out = std::move(next);
    }
    return out;
  };
  const std::vector<std::size_t> kept_off = offsets(kept_idx);
  const std::vector<std::size_t> traced_off = offsets(traced_idx);

  // A full trace still yields a 1x1 matrix.
  ComplexMatrix out(kept_off.size(), kept_off.size());
  for (std::size_t i = 0; i < kept_off.size(); ++i) {
    for (std::size_t j = 0; j < kept_off.size(); ++j) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) acc += rho(kept_off[i] + t, kept_off[j] + t);
      out(i, j) = acc;
    }
  }
  return out;
}

namespace {

std::vector<double> jacobi_eigenvalues(ComplexMatrix a) {
  const std::size_t n = a.rows();
  double scale = 0.0;
  for (const Complex& z : a.entries()) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off <= 1e-32 * scale * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        // Phase-align a_pq to a real value, then apply a real Jacobi rotation.
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on the (p, q) block.
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i).real();
  return out;
}

}  // namespace

std::vector<double> eig_hermitian(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("eigenvalues of non-square " + shape(a));
  if (a.hermitian_defect() > kHermitianTolerance) {
    throw InvalidInput("matrix is not Hermitian (defect " + std::to_string(a.hermitian_defect()) +
                       ")");
  }
  std::vector<double> out;
  if (a.rows() == 1) {
    out = {a(0, 0).real()};
  } else if (a.rows() == 2) {
    const double p = a(0, 0).real();
    const double d = a(1, 1).real();
    const double mean = 0.5 * (p + d);
    const double half_gap = 0.5 * (p - d);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(a(0, 1)));
    out = {mean - radius, mean + radius};
  } else {
    out = jacobi_eigenvalues(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex det_2x2(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("expected 2x2, got " + shape(a));
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

ComplexMatrix inverse_2x2(const ComplexMatrix& a) {
  const Complex det = det_2x2(a);
  if (std::abs(det) < kSingularityThreshold) {
    throw NotInvertible("2x2 matrix is singular (|det| = " + std::to_string(std::abs(det)) + ")");
  }
  return ComplexMatrix{{a(1, 1) / det, -a(0, 1) / det}, {-a(1, 0) / det, a(0, 0) / det}};
}

bool is_unitary(const ComplexMatrix& v, double tol) {
  if (!v.is_square()) return false;
  return matmul(dagger(v), v).max_abs_diff(ComplexMatrix::identity(v.rows())) <= tol;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0, 1}, {1, 0}};
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1, 0}, {0, -1}};
  return m;
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

}  // namespace eamtp
