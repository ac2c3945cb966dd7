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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

const Complex kI(0.0, 1.0);

TEST(ComplexMatrix, RejectsBadShapes) {
  EXPECT_THROW(ComplexMatrix(0, 2), InvalidInput);
  EXPECT_THROW(ComplexMatrix(17, 1), InvalidInput);
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), InvalidInput);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), InvalidInput);
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), InvalidInput);
}

TEST(ComplexMatrix, MatmulAndDagger) {
  const ComplexMatrix a{{1.0, kI}, {2.0, 3.0}};
  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ab = matmul(a, b);
  EXPECT_EQ(ab(0, 0), kI);
  EXPECT_EQ(ab(0, 1), Complex(1.0));
  EXPECT_EQ(ab(1, 0), Complex(3.0));
  const ComplexMatrix ad = dagger(a);
  EXPECT_EQ(ad(1, 0), -kI);
  EXPECT_EQ(ad(0, 1), Complex(2.0));
  EXPECT_THROW(matmul(a, ComplexMatrix(3, 3)), DimensionMismatch);
}

TEST(ComplexMatrix, KronOrdersLeftFactorFirst) {
  const ComplexMatrix k = kron(pauli_x(), identity2());
  // X on the most significant qubit maps |00> to |10> (index 2).
  EXPECT_EQ(k(2, 0), Complex(1.0));
  EXPECT_EQ(k(0, 2), Complex(1.0));
  EXPECT_EQ(k(1, 0), Complex(0.0));
}

TEST(ComplexMatrix, PartialTraceOfProduct) {
  const ComplexMatrix a{{0.7, 0.1 * kI}, {-0.1 * kI, 0.3}};
  const ComplexMatrix b{{0.4, 0.2}, {0.2, 0.6}};
  const ComplexMatrix ab = kron(a, b);
  const std::array<std::size_t, 2> dims = {2, 2};
  const std::array<std::size_t, 1> first = {0};
  const std::array<std::size_t, 1> second = {1};
  EXPECT_LT(partial_trace(ab, dims, first).max_abs_diff(a), 1e-15);
  EXPECT_LT(partial_trace(ab, dims, second).max_abs_diff(b), 1e-15);
  const ComplexMatrix scalar = partial_trace(ab, dims, std::span<const std::size_t>{});
  EXPECT_EQ(scalar.rows(), 1u);
  EXPECT_NEAR(scalar(0, 0).real(), 1.0, 1e-15);
}

TEST(ComplexMatrix, PartialTraceMiddleQubit) {
  // |0>|1>|0> keeps qubits 0 and 2 -> |00>.
  ComplexMatrix rho(8, 8);
  rho(2, 2) = 1.0;
  const std::array<std::size_t, 3> dims = {2, 2, 2};
  const std::array<std::size_t, 2> keep = {0, 2};
  const ComplexMatrix red = partial_trace(rho, dims, keep);
  EXPECT_EQ(red(0, 0), Complex(1.0));
  EXPECT_NEAR(red.trace().real(), 1.0, 0.0);
}

TEST(Eig, TwoByTwoAndJacobiAgree) {
  const ComplexMatrix h{{2.0, 1.0 - kI}, {1.0 + kI, -1.0}};
  const auto ev = eig_hermitian(h);
  const double disc = std::sqrt(2.25 + 2.0);
  EXPECT_NEAR(ev[0], 0.5 - disc, 1e-14);
  EXPECT_NEAR(ev[1], 0.5 + disc, 1e-14);

  // Embedding in a 4x4 with a known extra block must reproduce the spectrum.
  const ComplexMatrix big = kron(h, ComplexMatrix::diagonal(std::array<Complex, 2>{1.0, 3.0}));
  const auto eb = eig_hermitian(big);
  std::vector<double> want = {ev[0] * 3.0, ev[0], ev[1], ev[1] * 3.0};
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(eb[i], want[i], 1e-12);
}

TEST(Eig, RandomHermitianTraceAndSpectrum) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix a(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) a(i, j) = Complex(g(gen), g(gen));
    }
    const ComplexMatrix h = a + dagger(a);
    const auto ev = eig_hermitian(h);
    double sum = 0.0;
    for (double v : ev) sum += v;
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    // Trace of h^2 equals the sum of squared eigenvalues.
    double sq = 0.0;
    for (double v : ev) sq += v * v;
    EXPECT_NEAR(sq, matmul(h, h).trace().real(), 1e-9);
  }
}

TEST(Eig, RejectsNonHermitian) {
  EXPECT_THROW(eig_hermitian(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), InvalidInput);
}

TEST(Inverse, TwoByTwo) {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  EXPECT_EQ(det_2x2(a), Complex(-2.0));
  EXPECT_LT(matmul(a, inverse_2x2(a)).max_abs_diff(ComplexMatrix::identity(2)), 1e-15);
  EXPECT_THROW(inverse_2x2(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), NotInvertible);
}

TEST(Unitary, PaulisAreUnitary) {
  EXPECT_TRUE(is_unitary(pauli_x()));
  EXPECT_TRUE(is_unitary(pauli_y()));
  EXPECT_TRUE(is_unitary(pauli_z()));
  EXPECT_FALSE(is_unitary(ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}));
  EXPECT_LT(matmul(pauli_x(), pauli_y()).max_abs_diff(pauli_z() * kI), 1e-15);
}

}  // namespace
}  // namespace eamtp
