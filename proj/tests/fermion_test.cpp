// Copyright 2026 The LatticeQS Authors
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

#include <gtest/gtest.h>

#include <array>

#include "lqs/dense.hpp"
#include "lqs/errors.hpp"
#include "lqs/fermion.hpp"
#include "oracles/oracles.hpp"

namespace {

using lqs::cplx;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(JordanWigner, LadderOperatorsMatchOccupationBasis) {
  for (int n = 1; n <= 6; ++n) {
    for (int j = 0; j < n; ++j) {
      EXPECT_LT(max_abs(lqs::to_dense(lqs::jw_annihilation(j, n)) - oracle::annihilation(j, n)), 1e-15);
      EXPECT_LT(max_abs(lqs::to_dense(lqs::jw_creation(j, n)) - oracle::creation(j, n)), 1e-15);
    }
  }
}

// Property: {a_i, a_j^dag} = delta_ij, {a_i, a_j} = 0, on the qubit matrices.
TEST(JordanWigner, CanonicalAnticommutationRelations) {
  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXcd id = oracle::identity(n);
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXcd ai = lqs::to_dense(lqs::jw_annihilation(i, n));
      for (int j = 0; j < n; ++j) {
        const Eigen::MatrixXcd aj = lqs::to_dense(lqs::jw_annihilation(j, n));
        const Eigen::MatrixXcd adj = lqs::to_dense(lqs::jw_creation(j, n));
        const Eigen::MatrixXcd mixed = ai * adj + adj * ai - (i == j ? id : Eigen::MatrixXcd::Zero(id.rows(), id.cols()));
        EXPECT_LT(max_abs(mixed), 1e-13) << "n=" << n << " i=" << i << " j=" << j;
        EXPECT_LT(max_abs(ai * aj + aj * ai), 1e-13);
      }
    }
  }
}

TEST(JordanWigner, CreationIsAdjointOfAnnihilation) {
  for (int j = 0; j < 5; ++j) {
    const auto a = lqs::jw_annihilation(j, 5);
    EXPECT_LT(max_abs(lqs::to_dense(a.adjoint()) - lqs::to_dense(lqs::jw_creation(j, 5))), 1e-15);
  }
}

TEST(JordanWigner, NumberHoppingAndDensityMatchOracle) {
  const int n = 5;
  for (int i = 0; i < n; ++i) {
    EXPECT_LT(max_abs(lqs::to_dense(lqs::jw_number(i, n)) - oracle::number(i, n)), 1e-15);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Eigen::MatrixXcd hop = oracle::creation(i, n) * oracle::annihilation(j, n);
      EXPECT_LT(max_abs(lqs::to_dense(lqs::jw_hopping(i, j, 0.3, n)) - 0.3 * (hop + hop.adjoint())), 1e-14);
      EXPECT_LT(max_abs(lqs::to_dense(lqs::jw_density_density(i, j, -0.7, n)) -
                        -0.7 * oracle::number(i, n) * oracle::number(j, n)),
                1e-14);
      EXPECT_LT(max_abs(lqs::to_dense(lqs::jw_excitation_generator(i, j, n)) -
                        cplx(0, 1) * (hop - hop.adjoint())),
                1e-14);
    }
  }
}

TEST(JordanWigner, AdjacentHoppingIsXXPlusYY) {
  const auto h = lqs::jw_hopping(1, 2, 1.0, 4);
  EXPECT_DOUBLE_EQ(h.coefficient("IXXI"), 0.5);
  EXPECT_DOUBLE_EQ(h.coefficient("IYYI"), 0.5);
  EXPECT_EQ(h.size(), 2u);
}

TEST(JordanWigner, MapHermitianSumsOperators) {
  const std::array<lqs::FermionOp, 3> ops{{
      {lqs::FermionKind::kNumber, {0, 0}, 0.4},
      {lqs::FermionKind::kHop, {0, 2}, -0.2},
      {lqs::FermionKind::kDensityDensity, {1, 2}, 1.5},
  }};
  const auto h = lqs::jw_map_hermitian(ops, 3);
  const Eigen::MatrixXcd hop = oracle::creation(0, 3) * oracle::annihilation(2, 3);
  const Eigen::MatrixXcd expected = 0.4 * oracle::number(0, 3) - 0.2 * (hop + hop.adjoint()) +
                                    1.5 * oracle::number(1, 3) * oracle::number(2, 3);
  EXPECT_LT(max_abs(lqs::to_dense(h) - expected), 1e-14);
}

TEST(JordanWigner, RejectsOutOfRangeModes) {
  EXPECT_THROW(lqs::jw_number(3, 3), lqs::Error);
  EXPECT_THROW(lqs::jw_hopping(1, 1, 1.0, 3), lqs::Error);
  EXPECT_THROW(lqs::jw_creation(-1, 3), lqs::Error);
}

}  // namespace
