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

#include "lqs/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>

#include "lqs/errors.hpp"

namespace lqs {

namespace {

// Matrix elements below this are treated as structural zeros.
constexpr double kCouplingFloor = 1e-13;

struct Eigensystem {
  Eigen::VectorXd values;
  DenseMatrix vectors;
};

// Real-symmetric blocks (no odd-Y strings) go through the cheaper real solver.
Eigensystem hermitian_eigensystem(const DenseMatrix& m) {
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
    if (solver.info() != Eigen::Success) throw InvariantError("eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors().cast<cplx>()};
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw InvariantError("eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0U);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root is the smallest index
  }
};

}  // namespace

struct ExactPropagator::Block {
  std::vector<std::uint64_t> basis;
  DenseMatrix hamiltonian;
  mutable std::once_flag once;
  mutable Eigensystem eig;

  const Eigensystem& eigensystem() const {
    std::call_once(once, [this] { eig = hermitian_eigensystem(hamiltonian); });
    return eig;
  }
};

ExactPropagator::ExactPropagator(const PauliSum& h, int max_qubits) : n_qubits_(h.n_qubits()) {
  check_dense_cap(n_qubits_, max_qubits, "ExactPropagator");
  const CompiledPauliSum compiled(h);
  const std::size_t dim = std::size_t{1} << n_qubits_;

  DisjointSets sets(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    compiled.for_each_in_column(b, [&](std::uint64_t row, cplx v) {
      if (row != b && std::abs(v) > kCouplingFloor) {
        sets.unite(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(b));
      }
    });
  }

  block_of_.assign(dim, 0);
  slot_of_.assign(dim, 0);
  std::vector<std::uint32_t> block_of_root(dim, UINT32_MAX);
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto root = sets.find(static_cast<std::uint32_t>(b));
    if (block_of_root[root] == UINT32_MAX) {
      block_of_root[root] = static_cast<std::uint32_t>(blocks_.size());
      blocks_.push_back(std::make_unique<Block>());
    }
    const auto k = block_of_root[root];
    block_of_[b] = k;
    slot_of_[b] = static_cast<std::uint32_t>(blocks_[k]->basis.size());
    blocks_[k]->basis.push_back(b);
  }

  for (auto& block : blocks_) {
    const auto n = static_cast<Eigen::Index>(block->basis.size());
    block->hamiltonian = DenseMatrix::Zero(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      compiled.for_each_in_column(block->basis[static_cast<std::size_t>(c)],
                                  [&](std::uint64_t row, cplx v) {
                                    if (std::abs(v) > kCouplingFloor) {
                                      block->hamiltonian(slot_of_[row], c) += v;
                                    }
                                  });
    }
  }
}

ExactPropagator::~ExactPropagator() = default;
ExactPropagator::ExactPropagator(ExactPropagator&&) noexcept = default;
ExactPropagator& ExactPropagator::operator=(ExactPropagator&&) noexcept = default;

std::size_t ExactPropagator::block_count() const { return blocks_.size(); }

std::size_t ExactPropagator::largest_block() const {
  std::size_t m = 0;
  for (const auto& b : blocks_) m = std::max(m, b->basis.size());
  return m;
}

void ExactPropagator::evolve_inplace(double t, StateVector& s) const {
  if (s.n_qubits() != n_qubits_) throw DimensionError("ExactPropagator: qubit count mismatch");
  auto amps = s.amplitudes();
  for (const auto& block : blocks_) {
    const auto n = static_cast<Eigen::Index>(block->basis.size());
    if (n == 1) {
      const auto b = block->basis[0];
      const double phi = -t * block->hamiltonian(0, 0).real();
      amps[b] *= cplx{std::cos(phi), std::sin(phi)};
      continue;
    }
    DenseVector v(n);
    double weight = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = amps[block->basis[static_cast<std::size_t>(i)]];
      weight += std::norm(v(i));
    }
    if (weight == 0.0) continue;
    const auto& eig = block->eigensystem();
    DenseVector w = eig.vectors.adjoint() * v;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double phi = -t * eig.values(k);
      w(k) *= cplx{std::cos(phi), std::sin(phi)};
    }
    v.noalias() = eig.vectors * w;
    for (Eigen::Index i = 0; i < n; ++i) amps[block->basis[static_cast<std::size_t>(i)]] = v(i);
  }
}

StateVector ExactPropagator::evolve(double t, const StateVector& s) const {
  StateVector out = s;
  evolve_inplace(t, out);
  return out;
}

// ---------------------------------------------------------------------------

StateVector SectorSpectrum::eigenstate(Eigen::Index rank) const {
  if (rank < 0 || rank >= energies.size()) {
    throw ContractError("eigenstate rank " + std::to_string(rank) + " outside sector of size " +
                        std::to_string(energies.size()));
  }
  StateVector s(n_qubits);
  s[0] = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s[basis[i]] = vectors(static_cast<Eigen::Index>(i), rank);
  }
  return s;
}

SectorSpectrum sector_spectrum(const PauliSum& h, int hamming_weight, int max_qubits) {
  const int n = h.n_qubits();
  if (hamming_weight < 0 || hamming_weight > n) {
    throw EmptySectorError("no basis states with " + std::to_string(hamming_weight) +
                           " set bits on " + std::to_string(n) + " qubits");
  }
  check_dense_cap(n, max_qubits, "sector_spectrum");
  SectorSpectrum out;
  out.n_qubits = n;
  out.hamming_weight = hamming_weight;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> slot(dim, UINT32_MAX);
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::popcount(b) == hamming_weight) {
      slot[b] = static_cast<std::uint32_t>(out.basis.size());
      out.basis.push_back(b);
    }
  }
  const CompiledPauliSum compiled(h);
  const auto m = static_cast<Eigen::Index>(out.basis.size());
  DenseMatrix hs = DenseMatrix::Zero(m, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    compiled.for_each_in_column(out.basis[static_cast<std::size_t>(c)],
                                [&](std::uint64_t row, cplx v) {
                                  if (std::abs(v) <= kCouplingFloor) return;
                                  if (slot[row] == UINT32_MAX) {
                                    throw ContractError(
                                        "Hamiltonian does not conserve the number of set bits");
                                  }
                                  hs(slot[row], c) += v;
                                });
  }
  auto eig = hermitian_eigensystem(hs);
  out.energies = std::move(eig.values);
  out.vectors = std::move(eig.vectors);
  return out;
}

FullSpectrum full_spectrum(const PauliSum& h, int max_qubits) {
  auto eig = hermitian_eigensystem(to_dense(h, max_qubits));
  return {std::move(eig.values), std::move(eig.vectors)};
}

}  // namespace lqs
