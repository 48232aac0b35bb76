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

#include <random>
#include <string>

#include "lqs/dense.hpp"
#include "lqs/errors.hpp"
#include "lqs/numfmt.hpp"
#include "lqs/pauli.hpp"
#include "lqs/state.hpp"
#include "oracles/oracles.hpp"

namespace {

using lqs::cplx;
using lqs::PauliOperator;
using lqs::PauliString;
using lqs::PauliSum;
using lqs::PauliTerm;

std::string random_letters(int n, std::mt19937_64& rng) {
  static const char kLetters[] = "IXYZ";
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (int i = 0; i < n; ++i) s += kLetters[pick(rng)];
  return s;
}

PauliSum random_sum(int n, int terms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  PauliSum h(n);
  for (int k = 0; k < terms; ++k) h.add(random_letters(n, rng), c(rng));
  h.add_constant(c(rng));
  return h;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(PauliString, ParseAndFormatRoundTrip) {
  const PauliString p = lqs::parse_letters("XIYZ");
  EXPECT_EQ(p.x, 0b0101u);
  EXPECT_EQ(p.z, 0b1100u);
  EXPECT_EQ(p.letter(0), 'X');
  EXPECT_EQ(p.letter(2), 'Y');
  EXPECT_EQ(lqs::format_letters(p, 4), "XIYZ");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.y_count(), 1);
}

TEST(PauliString, RejectsBadLetters) {
  EXPECT_THROW(lqs::parse_letters("XQ"), lqs::Error);
}

TEST(PauliTerm, SingleQubitProductsMatchAlgebra) {
  const PauliTerm x("X"), y("Y"), z("Z");
  const PauliTerm xy = lqs::multiply(x, y);
  EXPECT_EQ(xy.letter_string(), "Z");
  EXPECT_EQ(xy.complex_coefficient(), cplx(0, 1));
  const PauliTerm yx = lqs::multiply(y, x);
  EXPECT_EQ(yx.complex_coefficient(), cplx(0, -1));
  const PauliTerm zz = lqs::multiply(z, z);
  EXPECT_TRUE(zz.is_identity());
  EXPECT_EQ(zz.complex_coefficient(), cplx(1, 0));
}

TEST(PauliTerm, ProductMatchesKroneckerOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const std::string a = random_letters(n, rng), b = random_letters(n, rng);
    const PauliTerm p(a, 0.7), q(b, -1.3, trial % 3 == 0);
    const PauliTerm pq = lqs::multiply(p, q);
    const Eigen::MatrixXcd expected = (p.complex_coefficient() * oracle::kron_letters(a)) *
                                      (q.complex_coefficient() * oracle::kron_letters(b));
    const Eigen::MatrixXcd got = pq.complex_coefficient() * oracle::kron_letters(pq.letter_string());
    EXPECT_LT(max_abs(got - expected), 1e-14) << a << " * " << b;
  }
}

TEST(PauliTerm, CommutationMatchesDenseCommutator) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    const std::string a = random_letters(n, rng), b = random_letters(n, rng);
    const Eigen::MatrixXcd ma = oracle::kron_letters(a), mb = oracle::kron_letters(b);
    const bool dense_commute = max_abs(ma * mb - mb * ma) < 1e-12;
    EXPECT_EQ(PauliTerm(a).commutes_with(PauliTerm(b)), dense_commute) << a << " " << b;
  }
}

TEST(PauliSum, MergesLikeTermsAndDropsCancellations) {
  PauliSum h(2);
  h.add("XZ", 0.5);
  h.add("XZ", 0.25);
  h.add("ZZ", 1.0);
  h.add("ZZ", -1.0);
  EXPECT_DOUBLE_EQ(h.coefficient("XZ"), 0.75);
  EXPECT_DOUBLE_EQ(h.coefficient("ZZ"), 0.0);
  EXPECT_EQ(h.size(), 1u);
}

TEST(PauliSum, IdentityTermsFoldIntoOffset) {
  PauliSum h(3);
  h.add("III", 2.5);
  EXPECT_DOUBLE_EQ(h.constant_offset(), 2.5);
  EXPECT_EQ(h.size(), 0u);
}

TEST(PauliSum, DenseMatchesKroneckerOracle) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n) {
    const PauliSum h = random_sum(n, 12, rng);
    EXPECT_LT(max_abs(lqs::to_dense(h) - oracle::dense(h)), 1e-14);
  }
}

TEST(PauliSum, DenseIsHermitian) {
  std::mt19937_64 rng(5);
  const PauliSum h = random_sum(4, 20, rng);
  const Eigen::MatrixXcd m = lqs::to_dense(h);
  EXPECT_LT(max_abs(m - m.adjoint()), 1e-14);
}

TEST(PauliSum, SerializeParseRoundTrip) {
  std::mt19937_64 rng(9);
  const PauliSum h = random_sum(5, 15, rng);
  const PauliSum back = lqs::parse_pauli_sum(lqs::serialize(h));
  EXPECT_EQ(back.n_qubits(), h.n_qubits());
  EXPECT_EQ(lqs::serialize(back), lqs::serialize(h));
  EXPECT_LT(max_abs(oracle::dense(back) - oracle::dense(h)), 1e-15);
}

TEST(PauliSum, QubitCountMismatchThrows) {
  PauliSum h(3);
  EXPECT_THROW(h.add("XX", 1.0), lqs::DimensionError);
  PauliSum g(2);
  EXPECT_THROW(h += g, lqs::DimensionError);
}

TEST(PauliSum, TranslateShiftsSupport) {
  PauliSum h(5);
  h.add("XYIII", 1.0);
  h.add_constant(0.5);
  const PauliSum t = lqs::translate(h, 2);
  EXPECT_DOUBLE_EQ(t.coefficient("IIXYI"), 1.0);
  EXPECT_DOUBLE_EQ(t.constant_offset(), 0.5);
  EXPECT_THROW(lqs::translate(h, 4), lqs::BoundaryError);
  EXPECT_THROW(lqs::translate(h, -1), lqs::BoundaryError);
}

TEST(PauliOperator, ProductMatchesDenseProduct) {
  std::mt19937_64 rng(13);
  const PauliSum a = random_sum(3, 8, rng), b = random_sum(3, 8, rng);
  const PauliOperator ab = PauliOperator(a) * PauliOperator(b);
  EXPECT_LT(max_abs(lqs::to_dense(ab) - oracle::dense(a) * oracle::dense(b)), 1e-13);
}

TEST(PauliOperator, CommutatorOfHermitianIsAntiHermitian) {
  std::mt19937_64 rng(17);
  const PauliSum a = random_sum(3, 6, rng), b = random_sum(3, 6, rng);
  const PauliOperator c = lqs::commutator(a, b);
  const Eigen::MatrixXcd m = lqs::to_dense(c);
  EXPECT_LT(max_abs(m + m.adjoint()), 1e-13);
  EXPECT_THROW((void)c.to_hermitian(), lqs::ContractError);
  const PauliSum ic = (cplx(0, 1) * c).to_hermitian();
  EXPECT_LT(max_abs(oracle::dense(ic) - cplx(0, 1) * m), 1e-13);
}

TEST(StateVector, ApplyMatchesDenseOnRandomStates) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 6; ++n) {
    const PauliSum h = random_sum(n, 10, rng);
    const lqs::StateVector s = oracle::random_state(n, rng);
    const Eigen::VectorXcd expected = oracle::dense(h) * oracle::to_vec(s);
    EXPECT_LT((oracle::to_vec(lqs::apply(h, s)) - expected).cwiseAbs().maxCoeff(), 1e-13);
    const lqs::CompiledPauliSum compiled(h);
    EXPECT_LT((oracle::to_vec(compiled.apply(s)) - expected).cwiseAbs().maxCoeff(), 1e-13);
    const double e = (oracle::to_vec(s).adjoint() * expected)(0).real();
    EXPECT_NEAR(lqs::expectation(h, s), e, 1e-13);
    EXPECT_NEAR(compiled.expectation(s), e, 1e-13);
  }
}

TEST(StateVector, ExpTermMatchesClosedForm) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    const std::string letters = random_letters(n, rng);
    const double theta = 0.1 + 0.05 * trial;
    const lqs::StateVector s = oracle::random_state(n, rng);
    // exp(-i theta P) = cos(theta) I - i sin(theta) P for a Pauli string P.
    const Eigen::MatrixXcd u = std::cos(theta) * oracle::identity(n) -
                               cplx(0, std::sin(theta)) * oracle::kron_letters(letters);
    const Eigen::VectorXcd expected = u * oracle::to_vec(s);
    const auto got = lqs::exp_term_apply(theta, PauliTerm(letters), s);
    EXPECT_LT((oracle::to_vec(got) - expected).cwiseAbs().maxCoeff(), 1e-13) << letters;
  }
}

TEST(StateVector, BitstringUsesQubitZeroFirst) {
  const auto s = lqs::StateVector::from_bitstring("0110");
  EXPECT_EQ(s[0b0110], cplx(1, 0));
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
}

TEST(NumberFormat, ShortestRoundTrip) {
  for (double v : {0.1, -2.5e-17, 1.0 / 3.0, 6.02214076e23, -0.0}) {
    const auto parsed = lqs::parse_double(lqs::format_double(v));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, v);
  }
  EXPECT_EQ(lqs::format_double(-0.0), "0");
  EXPECT_FALSE(lqs::parse_double("1.0x").has_value());
  EXPECT_FALSE(lqs::parse_int("12.5").has_value());
}

}  // namespace
