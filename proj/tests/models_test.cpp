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

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "lqs/dense.hpp"
#include "lqs/errors.hpp"
#include "lqs/fermion.hpp"
#include "lqs/models.hpp"
#include "lqs/spectral.hpp"
#include "oracles/oracles.hpp"

namespace {

using lqs::cplx;
using lqs::SchwingerParams;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd total_z(int n) {
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int q = 0; q < n; ++q) {
    std::string letters(static_cast<std::size_t>(n), 'I');
    letters[static_cast<std::size_t>(q)] = 'Z';
    z += oracle::kron_letters(letters);
  }
  return z;
}

TEST(Schwinger, FreeTwoSiteChainIsPureHopping) {
  SchwingerParams p;
  p.n_sites = 2;
  p.mass = 0.0;
  p.coupling = 0.0;
  const auto h = lqs::build_schwinger(p);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h.coefficient("XX"), 0.25);
  EXPECT_DOUBLE_EQ(h.coefficient("YY"), 0.25);
  EXPECT_DOUBLE_EQ(h.constant_offset(), 0.0);
}

struct SchwingerCase {
  int n;
  double mass, coupling, spacing, eps0;
  lqs::FluxNormalization flux;
};

class SchwingerOracle : public ::testing::TestWithParam<SchwingerCase> {};

TEST_P(SchwingerOracle, DenseMatchesFermionicConstruction) {
  const auto c = GetParam();
  SchwingerParams p{c.n, c.mass, c.coupling, c.spacing, c.eps0, c.flux};
  const double f = c.flux == lqs::FluxNormalization::kGaussLaw ? 0.5 : 1.0;
  const Eigen::MatrixXcd expected = oracle::schwinger(c.n, c.mass, c.coupling, c.spacing, c.eps0, f);
  EXPECT_LT(max_abs(oracle::dense(lqs::build_schwinger(p)) - expected), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(
    Parameters, SchwingerOracle,
    ::testing::Values(SchwingerCase{2, 0.3, 1.0, 1.0, 0.0, lqs::FluxNormalization::kGaussLaw},
                      SchwingerCase{4, 1.0, 1.0, 1.0, 0.0, lqs::FluxNormalization::kGaussLaw},
                      SchwingerCase{4, -0.7, 1.3, 0.8, 0.5, lqs::FluxNormalization::kGaussLaw},
                      SchwingerCase{6, 0.5, 1.0, 1.0, 0.0, lqs::FluxNormalization::kUnhalved},
                      SchwingerCase{6, -0.2, 0.6, 1.5, -1.0, lqs::FluxNormalization::kGaussLaw},
                      SchwingerCase{8, 0.1, 1.0, 1.0, 0.0, lqs::FluxNormalization::kGaussLaw}));

TEST(Schwinger, BareVacuumEnergyMatchesQuadraticForm) {
  SchwingerParams p{4, 1.0, 1.0, 1.0, 0.0};
  const auto h = lqs::build_schwinger(p);
  const auto vac = lqs::bare_vacuum(4);
  const Eigen::VectorXcd v = oracle::to_vec(vac);
  const double dense = (v.adjoint() * oracle::dense(h) * v)(0).real();
  EXPECT_NEAR(lqs::expectation(h, vac), dense, 1e-13);
  // Mass term only: sites 1 and 3 empty (Z = +1, sign -1), sites 2 and 4 filled (Z = -1, sign +1).
  EXPECT_NEAR(dense, -2.0, 1e-13);
}

TEST(Schwinger, BoundaryFieldShiftLeavesHoppingUntouched) {
  SchwingerParams p{6, 0.4, 1.0, 1.0, 0.0};
  SchwingerParams q = p;
  q.boundary_field = 0.75;
  const auto a = lqs::build_schwinger(p);
  const auto b = lqs::build_schwinger(q);
  for (const auto& t : b.terms()) {
    const auto& l = t.letters();
    const bool hopping = l.x != 0;
    const bool z_linear = l.x == 0 && std::popcount(l.z) == 1;
    if (hopping || !z_linear) {
      EXPECT_DOUBLE_EQ(t.coefficient(), a.coefficient(l)) << t.letter_string();
    }
  }
  EXPECT_NE(a.constant_offset(), b.constant_offset());
}

TEST(Schwinger, ConservesTotalCharge) {
  for (int n : {2, 4, 6, 8}) {
    SchwingerParams p{n, 0.37, 1.1, 0.9, 0.2};
    const Eigen::MatrixXcd h = lqs::to_dense(lqs::build_schwinger(p));
    const Eigen::MatrixXcd z = total_z(n);
    EXPECT_LT(max_abs(h * z - z * h), 1e-13) << "n=" << n;
  }
}

TEST(Schwinger, NeutralEigenstatesHaveZeroStaggeredCharge) {
  SchwingerParams p{6, 0.3, 1.0, 1.0, 0.0};
  const auto spectrum = lqs::sector_spectrum(lqs::build_schwinger(p), 3);
  const auto q = lqs::charge_operator(6);
  for (Eigen::Index k = 0; k < spectrum.energies.size(); ++k) {
    EXPECT_NEAR(lqs::expectation(q, spectrum.eigenstate(k)), 0.0, 1e-12);
  }
}

TEST(Schwinger, BuildersAreDeterministic) {
  SchwingerParams p{8, -0.7, 1.0, 1.0, 0.0};
  EXPECT_EQ(lqs::serialize(lqs::build_schwinger(p)), lqs::serialize(lqs::build_schwinger(p)));
}

TEST(Schwinger, RejectsInvalidParameters) {
  EXPECT_THROW(lqs::build_schwinger({3, 0.0}), lqs::ContractError);
  EXPECT_THROW(lqs::build_schwinger({4, 0.0, 1.0, 0.0}), lqs::ContractError);
  EXPECT_THROW(lqs::build_schwinger({4, std::nan("")}), lqs::ContractError);
}

TEST(BareVacuum, PatternHasEvenSitesFilled) {
  const auto v = lqs::bare_vacuum(4);
  EXPECT_EQ(v[lqs::bare_vacuum_index(4)], cplx(1, 0));
  EXPECT_EQ(lqs::bare_vacuum_index(4), 0b1010u);
  EXPECT_EQ(lqs::StateVector::from_bitstring("0101")[0b1010], cplx(1, 0));
  EXPECT_THROW(lqs::bare_vacuum(5), lqs::ContractError);
}

TEST(BareVacuum, MinimizesStaggeredMassForPositiveMass) {
  const int n = 6;
  SchwingerParams p{n, 1.0, 0.0};
  lqs::PauliSum mass(n);
  for (const auto& t : lqs::build_schwinger(p).terms()) {
    if (t.is_diagonal()) mass.add(t);
  }
  const double vac = lqs::expectation(mass, lqs::bare_vacuum(n));
  for (std::uint64_t b = 0; b < (1u << n); ++b) {
    if (b == lqs::bare_vacuum_index(n)) continue;
    EXPECT_GT(lqs::expectation(mass, lqs::StateVector::basis(n, b)), vac);
  }
}

TEST(ParticleDensity, CountsSitesAwayFromVacuum) {
  EXPECT_EQ(lqs::particle_density(lqs::bare_vacuum(4), 4), 0.0);
  EXPECT_DOUBLE_EQ(lqs::particle_density(lqs::StateVector::from_bitstring("1010"), 4), 1.0);
  const int n = 4;
  auto s = lqs::bare_vacuum(n);
  s += lqs::StateVector::from_bitstring("1001");  // pair on sites 1 and 2
  s *= cplx(1.0 / std::sqrt(2.0), 0.0);
  EXPECT_NEAR(lqs::particle_density(s, n), 2.0 / (2.0 * n), 1e-15);
  EXPECT_THROW(lqs::particle_density(lqs::bare_vacuum(4), 6), lqs::DimensionError);
}

TEST(ElectricField, BareVacuumIsUniformBoundaryField) {
  for (double eps0 : {0.0, 1.0, -0.4}) {
    SchwingerParams p{8, 0.0, 1.0, 1.0, eps0};
    const auto flux = lqs::reconstruct_efield("01010101", p);
    ASSERT_EQ(flux.size(), 7u);
    for (double f : flux) EXPECT_DOUBLE_EQ(f, eps0);
  }
}

TEST(ElectricField, AdjacentPairCarriesUnitString) {
  SchwingerParams p{4, 0.0};
  // Particle on site 1, antiparticle (hole) on site 2.
  const auto flux = lqs::reconstruct_efield("1001", p);
  ASSERT_EQ(flux.size(), 3u);
  EXPECT_DOUBLE_EQ(std::abs(flux[0]), 1.0);
  EXPECT_DOUBLE_EQ(flux[1], 0.0);
  EXPECT_DOUBLE_EQ(flux[2], 0.0);
  EXPECT_THROW(lqs::reconstruct_efield("100", p), lqs::DimensionError);
}

TEST(ElectricField, MatchesFluxOperatorOnBasisStates) {
  SchwingerParams p{6, 0.0, 1.0, 1.0, 0.3};
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t b = rng() & 63u;
    std::string bits;
    for (int q = 0; q < 6; ++q) bits += ((b >> q) & 1) ? '1' : '0';
    const auto flux = lqs::reconstruct_efield(bits, p);
    for (int bond = 1; bond <= 5; ++bond) {
      EXPECT_NEAR(lqs::expectation(lqs::flux_operator(bond, p), lqs::StateVector::basis(6, b)),
                  flux[static_cast<std::size_t>(bond - 1)], 1e-14);
    }
  }
}

TEST(Thirring, TwoSiteFreeChainHasPositiveHopping) {
  const auto h = lqs::build_thirring({2, 0.0, 0.0});
  EXPECT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h.coefficient("XX"), 0.25);
  EXPECT_DOUBLE_EQ(h.coefficient("YY"), 0.25);
}

TEST(Thirring, SpinAndFermionicBuildersAgree) {
  for (int n = 2; n <= 8; n += 2) {
    const lqs::ThirringParams p{n, 0.35, 0.8};
    const Eigen::MatrixXcd spin = lqs::to_dense(lqs::build_thirring(p));
    EXPECT_LT(max_abs(spin - lqs::to_dense(lqs::build_thirring_fermionic(p))), 1e-13) << n;
    EXPECT_LT(max_abs(spin - oracle::thirring(n, p.mass, p.coupling)), 1e-13) << n;
  }
}

TEST(Thirring, FreeMasslessSpectrumIsSymmetric) {
  const Eigen::VectorXd e = oracle::eig(lqs::to_dense(lqs::build_thirring({6, 0.0, 0.0}))).values;
  for (Eigen::Index k = 0; k < e.size(); ++k) EXPECT_NEAR(e(k), -e(e.size() - 1 - k), 1e-10);
}

TEST(Deuteron, TwoLevelCoefficients) {
  const auto h = lqs::build_deuteron({2});
  EXPECT_EQ(h.size(), 4u);
  EXPECT_DOUBLE_EQ(h.constant_offset(), 5.906709);
  EXPECT_DOUBLE_EQ(h.coefficient("ZI"), 0.218291);
  EXPECT_DOUBLE_EQ(h.coefficient("IZ"), -6.125);
  EXPECT_DOUBLE_EQ(h.coefficient("XX"), -2.143304);
  EXPECT_DOUBLE_EQ(h.coefficient("YY"), -2.143304);
  EXPECT_THROW(lqs::build_deuteron({4}), lqs::ContractError);
}

TEST(Deuteron, GroundEnergies) {
  const double e2 = oracle::eig(oracle::dense(lqs::build_deuteron({2}))).values(0);
  const double reduced = 5.906709 - std::sqrt(6.343291 * 6.343291 + 4.286608 * 4.286608);
  EXPECT_NEAR(e2, reduced, 1e-12);
  EXPECT_NEAR(e2, -1.749, 1e-3);
  const double e3 = oracle::eig(oracle::dense(lqs::build_deuteron({3}))).values(0);
  EXPECT_LT(e3, e2);
}

TEST(Deuteron, OneParticleSectorIsTridiagonal) {
  const Eigen::MatrixXcd h = oracle::dense(lqs::build_deuteron({3}));
  const std::uint64_t one[] = {0b001, 0b010, 0b100};
  EXPECT_LT(std::abs(h(one[0], one[2])), 1e-15);
  EXPECT_GT(std::abs(h(one[0], one[1])), 1.0);
  EXPECT_GT(std::abs(h(one[1], one[2])), 1.0);
}

TEST(Resource, TwoSiteCouplingAndField) {
  const auto h = lqs::build_resource_xy({2, 1.5, 1.0, 0.2, 1.0});
  EXPECT_DOUBLE_EQ(h.coefficient("XX"), 0.75);
  EXPECT_DOUBLE_EQ(h.coefficient("YY"), 0.75);
  EXPECT_DOUBLE_EQ(h.coefficient("ZI"), 0.2);
  EXPECT_DOUBLE_EQ(h.coefficient("IZ"), 0.2);
}

TEST(Resource, PowerLawDecay) {
  const lqs::ResourceParams p{4, 1.0, 2.5, 0.0, 1.0};
  EXPECT_NEAR(lqs::resource_coupling(p, 0, 2) / lqs::resource_coupling(p, 0, 1), std::pow(2.0, -2.5), 1e-15);
  EXPECT_THROW(lqs::build_resource_xy({4, 1.0, 3.0}), lqs::ContractError);
  EXPECT_THROW(lqs::build_resource_xy({4, 1.0, 0.0}), lqs::ContractError);
}

TEST(Resource, ConservesTotalZ) {
  const Eigen::MatrixXcd h = lqs::to_dense(lqs::build_resource_xy({5, 0.9, 1.3, 0.4, 1.0}));
  const Eigen::MatrixXcd z = total_z(5);
  EXPECT_LT(max_abs(h * z - z * h), 1e-13);
  const auto l = lqs::local_z(2, 0.6, 5);
  EXPECT_DOUBLE_EQ(l.coefficient("IIZII"), 0.3);
}

}  // namespace
