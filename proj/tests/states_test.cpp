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

#include <gtest/gtest.h>

#include <cmath>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

TEST(Ket, ValidatesNormAndSize) {
  EXPECT_THROW(Ket(1, {1.0, 1.0}), InvalidInput);
  EXPECT_THROW(Ket(2, {1.0, 0.0}), InvalidInput);
  EXPECT_THROW(Ket(5, std::vector<Complex>(32)), InvalidInput);
  EXPECT_THROW(Ket::normalized(1, {0.0, 0.0}), InvalidInput);
  const Ket k = Ket::normalized(1, {3.0, 4.0});
  EXPECT_NEAR(k[0].real(), 0.6, 1e-15);
}

TEST(Ket, InputState) {
  const Ket in = input_state(0.6, Complex(0.0, 0.8));
  EXPECT_NEAR(std::norm(in[1]), 0.64, 1e-15);
  // Slightly off norm is repaired, far off is rejected.
  EXPECT_NO_THROW(input_state(0.6, 0.8 + 1e-8));
  EXPECT_THROW(input_state(1.0, 1.0), InvalidInput);
  EXPECT_THROW(input_state(0.0, 0.0), InvalidInput);
  EXPECT_NEAR(std::norm(input_from_population(0.3)[0]), 0.3, 1e-15);
}

TEST(Ket, WStateAmplitudes) {
  const Ket w = w_state();
  EXPECT_NEAR(w[0b100].real(), 0.5, 1e-15);
  EXPECT_NEAR(w[0b010].real(), 0.5, 1e-15);
  EXPECT_NEAR(w[0b001].real(), std::sqrt(2.0) / 2.0, 1e-15);
  EXPECT_EQ(w[0b000], Complex(0.0));
  const Ket w2 = w_state(2.0, 0.3, 0.0);
  EXPECT_NEAR(std::norm(w2[0b010]), 2.0 / 6.0, 1e-15);
  EXPECT_NEAR(std::arg(w2[0b010]), 0.3, 1e-15);
}

TEST(Ket, BasesAreOrthonormal) {
  for (const auto* basis : {&eta_basis(), &bell_basis()}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_NEAR(std::abs(inner((*basis)[i], (*basis)[j])), i == j ? 1.0 : 0.0, 1e-15);
      }
    }
  }
}

TEST(Ket, TensorOrdering) {
  const Ket one(1, {0.0, 1.0});
  const Ket zero(1, {1.0, 0.0});
  const Ket t = tensor(one, zero);
  EXPECT_EQ(t[0b10], Complex(1.0));
}

TEST(DensityMatrix, Physicality) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.0}, {0.0, 0.6}}), InvalidInput);
  EXPECT_THROW(DensityMatrix(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), InvalidInput);
  EXPECT_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), InvalidInput);
  EXPECT_NO_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));
  const DensityMatrix d = DensityMatrix::from_unnormalized(ComplexMatrix{{2.0, 0.0}, {0.0, 2.0}});
  EXPECT_NEAR(d.matrix()(0, 0).real(), 0.5, 1e-15);
  EXPECT_EQ(d.n_qubits(), 1u);
}

TEST(Fidelity, PureAndMixed) {
  const Ket plus = Ket::normalized(1, {1.0, 1.0});
  EXPECT_NEAR(fidelity(plus, DensityMatrix::pure(plus)), 1.0, 1e-15);
  const DensityMatrix mixed(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
  EXPECT_NEAR(fidelity(plus, mixed), 0.5, 1e-15);
  EXPECT_THROW(fidelity(bell_state(), mixed), DimensionMismatch);
}

}  // namespace
}  // namespace eamtp
