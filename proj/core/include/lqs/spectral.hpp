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

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lqs/dense.hpp"
#include "lqs/pauli.hpp"
#include "lqs/state.hpp"

namespace lqs {

/// Exact e^{-iHt} from the eigendecomposition of the dense Hamiltonian.
///
/// The computational basis is split into the connected components of H's
/// sparsity graph, so a particle-number-conserving H is diagonalized one
/// sector at a time. Blocks are diagonalized lazily, the first time a state
/// with support on them is propagated; this is thread-safe.
class ExactPropagator {
 public:
  explicit ExactPropagator(const PauliSum& h, int max_qubits = kDefaultDenseQubitCap);
  ~ExactPropagator();
  ExactPropagator(ExactPropagator&&) noexcept;
  ExactPropagator& operator=(ExactPropagator&&) noexcept;

  int n_qubits() const { return n_qubits_; }
  std::size_t block_count() const;
  std::size_t largest_block() const;

  StateVector evolve(double t, const StateVector& s) const;
  void evolve_inplace(double t, StateVector& s) const;

 private:
  struct Block;
  int n_qubits_;
  std::vector<std::unique_ptr<Block>> blocks_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint32_t> slot_of_;
};

/// Eigenpairs of H restricted to basis states with a fixed number of set bits.
struct SectorSpectrum {
  int n_qubits = 0;
  int hamming_weight = 0;
  std::vector<std::uint64_t> basis;  // ascending basis indices
  Eigen::VectorXd energies;          // ascending
  DenseMatrix vectors;               // columns are eigenvectors in `basis` order

  StateVector eigenstate(Eigen::Index rank) const;
};

/// Throws EmptySectorError for a weight outside [0, n], ResourceError beyond
/// the cap and ContractError when H couples the sector to other weights.
SectorSpectrum sector_spectrum(const PauliSum& h, int hamming_weight,
                               int max_qubits = kDefaultDenseQubitCap);

/// All eigenpairs of the dense matrix (ascending energies).
struct FullSpectrum {
  Eigen::VectorXd energies;
  DenseMatrix vectors;
};
FullSpectrum full_spectrum(const PauliSum& h, int max_qubits = kDefaultDenseQubitCap);

}  // namespace lqs
