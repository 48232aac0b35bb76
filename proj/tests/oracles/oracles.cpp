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

#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

Matrix pauli(char letter) {
  Matrix m(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return m;
}

Matrix kron_letters(const std::string& letters) {
  Matrix out = Matrix::Identity(1, 1);
  // Highest qubit is the leftmost Kronecker factor.
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out = Eigen::kroneckerProduct(out, pauli(*it)).eval();
  }
  return out;
}

Matrix dense(const lqs::PauliSum& h) {
  const int n = h.n_qubits();
  Matrix m = h.constant_offset() * identity(n);
  for (const auto& t : h.terms()) m += t.complex_coefficient() * kron_letters(t.letter_string());
  return m;
}

Matrix identity(int n) {
  const auto dim = Eigen::Index{1} << n;
  return Matrix::Identity(dim, dim);
}

Matrix annihilation(int mode, int n) {
  const auto dim = std::uint64_t{1} << n;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::uint64_t bit = std::uint64_t{1} << mode;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (!(b & bit)) continue;
    const int below = std::popcount(b & (bit - 1));
    m(static_cast<Eigen::Index>(b ^ bit), static_cast<Eigen::Index>(b)) = (below % 2) ? -1.0 : 1.0;
  }
  return m;
}

Matrix creation(int mode, int n) { return annihilation(mode, n).adjoint(); }

Matrix number(int mode, int n) { return creation(mode, n) * annihilation(mode, n); }

Matrix diagonal(int n, const std::function<double(std::uint64_t)>& f) {
  const auto dim = std::uint64_t{1} << n;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = f(b);
  return m;
}

Matrix schwinger(int n, double mass, double coupling, double spacing, double eps0, double flux_factor) {
  Matrix h = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int q = 0; q + 1 < n; ++q) {
    const Matrix hop = creation(q, n) * annihilation(q + 1, n);
    h += (1.0 / (2.0 * spacing)) * (hop + hop.adjoint());
  }
  h += diagonal(n, [&](std::uint64_t b) {
    double e = 0.0;
    double flux = eps0;
    for (int site = 1; site <= n; ++site) {
      const double sign = (site % 2 == 0) ? 1.0 : -1.0;
      const double z = ((b >> (site - 1)) & 1) ? -1.0 : 1.0;
      e += 0.5 * mass * sign * z;
      if (site < n) {
        flux -= flux_factor * (z + sign);
        e += 0.5 * coupling * coupling * spacing * flux * flux;
      }
    }
    return e;
  });
  return h;
}

Matrix thirring(int n, double mass, double coupling) {
  Matrix h = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  const Matrix half = 0.5 * identity(n);
  for (int j = 1; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const int q = j - 1;
    h -= mass * sign * (number(q, n) - half);
    if (j < n) {
      const Matrix hop = creation(q, n) * annihilation(q + 1, n);
      h += (-sign / 2.0) * (hop + hop.adjoint());
      h += coupling * coupling * (number(q, n) - half) * (number(q + 1, n) - half);
    }
  }
  return h;
}

Eig eig(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("oracle eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Vector evolve(const Eig& e, const Vector& psi, double t) {
  Vector c = e.vectors.adjoint() * psi;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(cplx(0.0, -e.values(k) * t));
  return e.vectors * c;
}

cplx correlator(const Eig& e, const Vector& psi, const Matrix& a, const Matrix& b, double t) {
  const Vector left = e.vectors.adjoint() * psi;
  const Vector right = e.vectors.adjoint() * (b * psi);
  const Matrix a_eig = e.vectors.adjoint() * a * e.vectors;
  cplx acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < left.size(); ++i) {
    for (Eigen::Index j = 0; j < right.size(); ++j) {
      const double phase = (e.values(i) - e.values(j)) * t;
      acc += std::conj(left(i)) * std::exp(cplx(0.0, phase)) * a_eig(i, j) * right(j);
    }
  }
  return acc;
}

SectorGround sector_ground(const Matrix& h, int n, int popcount) {
  std::vector<Eigen::Index> basis;
  for (Eigen::Index b = 0; b < (Eigen::Index{1} << n); ++b) {
    if (std::popcount(static_cast<std::uint64_t>(b)) == popcount) basis.push_back(b);
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix block(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) block(i, j) = h(basis[i], basis[j]);
  }
  const Eig e = eig(block);
  Vector full = Vector::Zero(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < d; ++i) full(basis[i]) = e.vectors(i, 0);
  return {e.values(0), d > 1 ? e.values(1) : e.values(0), full};
}

Vector to_vec(const lqs::StateVector& s) {
  Vector v(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

lqs::StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return lqs::StateVector(n, std::move(amps));
}

Matrix gibbs(const Matrix& h, double beta) {
  const Eig e = eig(h);
  Eigen::VectorXd w(e.values.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) w(k) = std::exp(-beta * e.values(k));
  return e.vectors * w.asDiagonal() * e.vectors.adjoint();
}

}  // namespace oracle
