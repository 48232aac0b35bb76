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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "lqs/errors.hpp"
#include "lqs/models.hpp"
#include "lqs/thermal.hpp"
#include "oracles/oracles.hpp"

namespace {

using lqs::cplx;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double oracle_observable(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& o,
                         double t) {
  const auto e = oracle::eig(h1);
  Eigen::VectorXcd phase(e.values.size());
  for (Eigen::Index k = 0; k < phase.size(); ++k) phase(k) = std::exp(cplx(0.0, -e.values(k) * t));
  const Eigen::MatrixXcd u = e.vectors * phase.asDiagonal() * e.vectors.adjoint();
  const Eigen::MatrixXcd rho_t = u * rho * u.adjoint();
  return ((o * rho_t).trace() / rho.trace()).real();
}

TEST(Bloch, ZeroBetaIsIdentity) {
  const auto ts = lqs::bloch_propagate(lqs::build_schwinger({4, 0.5}), 0.0, 4);
  EXPECT_LT(max_abs(ts.rho - oracle::identity(4)), 1e-15);
  EXPECT_DOUBLE_EQ(ts.trace, 16.0);
}

TEST(Bloch, MatchesMatrixExponentialAndPartitionFunction) {
  const auto h = lqs::build_schwinger({6, 0.3});
  const Eigen::MatrixXcd hd = oracle::dense(h);
  for (double beta : {0.1, 1.0, 3.0}) {
    for (int steps : {1, 7}) {
      const auto ts = lqs::bloch_propagate(h, beta, steps);
      const Eigen::MatrixXcd expected = oracle::gibbs(hd, beta);
      EXPECT_LT(max_abs(ts.rho - expected), 1e-10 * std::max(1.0, max_abs(expected)));
      double z = 0.0;
      const auto e = oracle::eig(hd);
      for (Eigen::Index k = 0; k < e.values.size(); ++k) z += std::exp(-beta * e.values(k));
      EXPECT_NEAR(ts.trace, z, 1e-10 * z);
      EXPECT_LT(max_abs(ts.rho - ts.rho.adjoint()), 1e-12 * max_abs(ts.rho));
      EXPECT_LT(max_abs(hd * ts.rho - ts.rho * hd), 1e-10 * std::max(1.0, max_abs(ts.rho)));
    }
  }
}

TEST(Bloch, LargeBetaProjectsOntoGroundState) {
  const auto h = lqs::build_deuteron({3});
  const Eigen::MatrixXcd hd = oracle::dense(h);
  const auto e = oracle::eig(hd);
  const double gap = e.values(1) - e.values(0);
  const auto ts = lqs::bloch_propagate(h, 40.0 / gap, 8);
  const Eigen::MatrixXcd rho = ts.rho / ts.trace;
  const Eigen::VectorXcd g = e.vectors.col(0);
  EXPECT_GE((g.adjoint() * rho * g)(0).real(), 1.0 - 1e-8);
}

TEST(Bloch, RejectsBadArguments) {
  const auto h = lqs::build_schwinger({4, 0.5});
  EXPECT_THROW(lqs::bloch_propagate(h, -1.0, 4), lqs::ContractError);
  EXPECT_THROW(lqs::bloch_propagate(h, 1.0, 0), lqs::ContractError);
  EXPECT_THROW(lqs::bloch_propagate(lqs::build_schwinger({8, 0.5}), 1.0, 1, 6), lqs::ResourceError);
}

TEST(Decompose, DiagonalMatrixGivesDiagonalEntries) {
  lqs::PauliSum h(3);
  h.add("ZII", 0.4);
  h.add("IZZ", -0.2);
  const auto ts = lqs::bloch_propagate(h, 1.0, 1);
  const auto e = lqs::decompose(ts, 0.0);
  EXPECT_EQ(e.entries.size(), 8u);
  for (const auto& p : e.entries) {
    EXPECT_EQ(p.ket, p.bra);
    EXPECT_EQ(p.weight, ts.rho(static_cast<Eigen::Index>(p.ket), static_cast<Eigen::Index>(p.ket)));
  }
  EXPECT_NEAR(e.trace_estimate, ts.trace, 1e-12);
}

TEST(Decompose, HighThresholdIsEmpty) {
  const auto ts = lqs::bloch_propagate(lqs::build_schwinger({4, 0.5}), 1.0, 2);
  const auto e = lqs::decompose(ts, ts.rho.cwiseAbs().maxCoeff() + 1.0);
  EXPECT_TRUE(e.entries.empty());
  EXPECT_EQ(e.trace_estimate, 0.0);
  EXPECT_THROW(lqs::ensemble_observable(e, ts.h0, ts.h0, 0.0), lqs::ContractError);
  EXPECT_THROW(lqs::decompose(ts, -1.0), lqs::ContractError);
}

TEST(Decompose, ReconstructionErrorShrinksWithThreshold) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    lqs::PauliSum h(5);
    static const char kLetters[] = "IXYZ";
    for (int k = 0; k < 12; ++k) {
      std::string l;
      for (int q = 0; q < 5; ++q) l += kLetters[rng() % 4];
      h.add(l, u(rng));
    }
    const auto ts = lqs::bloch_propagate(h, 1.0, 3);
    double previous = 1e300;
    for (double threshold : {1.0, 0.3, 0.1, 0.03, 0.01, 0.0}) {
      const double err = (ts.rho - lqs::reconstruct(lqs::decompose(ts, threshold))).norm();
      EXPECT_LE(err, previous + 1e-15);
      previous = err;
    }
    EXPECT_LT(previous, 1e-15);
  }
}

TEST(Ensemble, InitialEnergyMatchesDense) {
  const auto h0 = lqs::build_schwinger({6, 0.5});
  const auto h1 = lqs::build_schwinger({6, 1.0});
  const auto ts = lqs::bloch_propagate(h0, 0.8, 4);
  const auto e = lqs::decompose(ts, 0.0);
  const double expected = ((oracle::dense(h1) * ts.rho).trace() / ts.rho.trace()).real();
  EXPECT_NEAR(lqs::ensemble_observable(e, h1, h1, 0.0), expected, 1e-10);
}

TEST(Ensemble, MatchesDenseTraceAcrossTimes) {
  const auto h0 = lqs::build_schwinger({6, 0.5});
  const auto h1 = lqs::build_schwinger({6, -0.3, 1.2});
  const auto o = lqs::staggered_order_operator(6);
  const auto ts = lqs::bloch_propagate(h0, 1.0, 8);
  const auto e = lqs::decompose(ts, 0.0);
  std::vector<double> times;
  for (int i = 0; i <= 10; ++i) times.push_back(0.5 * i);
  const auto got = lqs::ensemble_observable(e, h1, o, times);
  const Eigen::MatrixXcd h1d = oracle::dense(h1), od = oracle::dense(o);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_NEAR(got[i], oracle_observable(ts.rho, h1d, od, times[i]), 1e-8) << times[i];
  }
}

TEST(Ensemble, EquilibriumIsStationary) {
  const auto h0 = lqs::build_schwinger({4, 0.5});
  const auto ts = lqs::bloch_propagate(h0, 1.5, 4);
  const auto e = lqs::decompose(ts, 0.0);
  const double at0 = lqs::ensemble_observable(e, h0, h0, 0.0);
  for (double t : {0.3, 1.1, 4.0}) EXPECT_NEAR(lqs::ensemble_observable(e, h0, h0, t), at0, 1e-9);
}

TEST(Ensemble, PermutationInvariantAndLinear) {
  const auto h0 = lqs::build_schwinger({4, 0.2});
  const auto h1 = lqs::build_schwinger({4, 0.9});
  const auto ts = lqs::bloch_propagate(h0, 0.7, 2);
  auto e = lqs::decompose(ts, 1e-3);
  const auto a = lqs::staggered_order_operator(4);
  const auto b = lqs::charge_operator(4) + lqs::flux_operator(2, {4, 0.2});
  const double va = lqs::ensemble_observable(e, h1, a, 0.9);
  const double vb = lqs::ensemble_observable(e, h1, b, 0.9);
  const double vab = lqs::ensemble_observable(e, h1, 2.0 * a + (-0.5) * b, 0.9);
  EXPECT_NEAR(vab, 2.0 * va - 0.5 * vb, 1e-12);
  std::reverse(e.entries.begin(), e.entries.end());
  std::mt19937_64 rng(4);
  std::shuffle(e.entries.begin(), e.entries.end(), rng);
  EXPECT_EQ(lqs::ensemble_observable(e, h1, a, 0.9), va);
}

TEST(GibbsDump, RoundTrip) {
  const auto ts = lqs::bloch_propagate(lqs::build_schwinger({4, 0.5}), 1.0, 2);
  const auto path = std::filesystem::temp_directory_path() / "lqs_gibbs_roundtrip.bin";
  lqs::write_gibbs(path, ts);
  EXPECT_EQ(std::filesystem::file_size(path), 16u + 16u * 16u * 16u);
  int n = 0;
  const auto back = lqs::read_gibbs(path, &n);
  EXPECT_EQ(n, 4);
  EXPECT_EQ(back, ts.rho);
  {
    std::ofstream bad(path, std::ios::binary);
    bad << "NOTGIBBS";
  }
  EXPECT_THROW(lqs::read_gibbs(path), lqs::ContractError);
  std::filesystem::remove(path);
}

}  // namespace
