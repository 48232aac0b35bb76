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
#include <filesystem>
#include <span>
#include <vector>

#include "lqs/dense.hpp"
#include "lqs/pauli.hpp"

// Thermal states and real-time ensemble observables.

namespace lqs {

/// Unnormalized Gibbs operator rho(beta) = e^{-beta H0}.
struct ThermalState {
  DenseMatrix rho;
  double beta = 0.0;
  double trace = 0.0;
  PauliSum h0{1};

  int n_qubits() const { return h0.n_qubits(); }
};

/// Integrates d rho / d beta = -(H0 rho + rho H0)/2 from rho(0) = 1 with the
/// symmetric update rho <- E rho E, E = e^{-d beta H0 / 2}.
ThermalState bloch_propagate(const PauliSum& h0, double beta, int steps,
                             int max_qubits = kDefaultDenseQubitCap);

struct EnsembleEntry {
  cplx weight;
  std::uint64_t ket = 0;
  std::uint64_t bra = 0;
};

/// rho ~ sum_p chi_p |a_p><b_p| over computational basis states.
struct PureStateEnsemble {
  std::vector<EnsembleEntry> entries;
  int n_qubits = 0;
  double trace_estimate = 0.0;
};

/// Keeps every matrix element with |rho_ab| > threshold, scanning row-major.
PureStateEnsemble decompose(const ThermalState& ts, double threshold);

/// Dense sum_p chi_p |a_p><b_p|.
DenseMatrix reconstruct(const PureStateEnsemble& e);

struct EnsembleOptions {
  int max_qubits = kDefaultDenseQubitCap;
  /// Product-formula sweeps when the exact propagator does not fit.
  int trotter_steps = 256;
  int threads = 0;
};

/// Tr(O e^{iH1 t} rho e^{-iH1 t}) / Tr rho with rho the ensemble. Diagonal
/// entries use <a|O(t)|a>; each off-diagonal pair recovers <a|O(t)|b> from the
/// four superpositions (|a> +- |b>)/sqrt2 and (|a> +- i|b>)/sqrt2. Entries
/// are summed in (ket, bra) order regardless of their storage order.
double ensemble_observable(const PureStateEnsemble& e, const PauliSum& h1, const PauliSum& o,
                           double t, const EnsembleOptions& options = {});

/// Same for several times, sharing the propagator.
std::vector<double> ensemble_observable(const PureStateEnsemble& e, const PauliSum& h1,
                                        const PauliSum& o, std::span<const double> times,
                                        const EnsembleOptions& options = {});

/// Binary dump: 8-byte magic "LQSGIBBS", little-endian uint64 qubit count,
/// then the matrix row-major as (re, im) doubles.
void write_gibbs(const std::filesystem::path& path, const ThermalState& ts);
DenseMatrix read_gibbs(const std::filesystem::path& path, int* n_qubits = nullptr);

}  // namespace lqs
