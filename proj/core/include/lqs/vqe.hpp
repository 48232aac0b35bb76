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

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lqs/dense.hpp"
#include "lqs/models.hpp"
#include "lqs/optimize.hpp"
#include "lqs/pauli.hpp"
#include "lqs/state.hpp"

namespace lqs {

/// One factor of a layered ansatz.
///
/// A global layer applies e^{-i theta G} with a single angle. A local-Z layer
/// applies prod_j e^{-i theta_j G_j} with one angle per generator, where every
/// G_j must be diagonal.
struct AnsatzLayer {
  enum class Kind { kGlobal, kLocal };

  Kind kind = Kind::kGlobal;
  std::vector<PauliSum> generators;  // one entry for kGlobal

  int arity() const { return kind == Kind::kGlobal ? 1 : static_cast<int>(generators.size()); }

  static AnsatzLayer global(PauliSum generator);
  static AnsatzLayer local(std::vector<PauliSum> generators);
};

class Ansatz {
 public:
  /// Global generators whose terms all commute are applied as exact products
  /// of single-string rotations; others go through an ExactPropagator, which
  /// is subject to `max_qubits`.
  Ansatz(StateVector initial, std::vector<AnsatzLayer> layers,
         int max_qubits = kDefaultDenseQubitCap);
  ~Ansatz();
  Ansatz(Ansatz&&) noexcept;
  Ansatz& operator=(Ansatz&&) noexcept;

  int n_qubits() const { return initial_.n_qubits(); }
  int parameter_count() const { return parameter_count_; }
  const StateVector& initial_state() const { return initial_; }
  const std::vector<AnsatzLayer>& layers() const { return layers_; }

  /// Layers act in order: the first layer is applied to the initial state first.
  StateVector prepare(std::span<const double> params) const;

 private:
  struct Compiled;
  StateVector initial_;
  std::vector<AnsatzLayer> layers_;
  int parameter_count_ = 0;
  std::vector<std::unique_ptr<Compiled>> compiled_;
};

/// Unitary coupled-cluster ansatz for the 2- or 3-level deuteron on |100..>.
/// level 2: one layer e^{theta (a0^dag a1 - a1^dag a0)}.
/// level 3: e^{eta (a0^dag a2 - h.c.)} then e^{theta (a0^dag a1 - h.c.)};
/// parameters are ordered by layer, so params = {eta, theta}.
Ansatz ucc_deuteron_ansatz(int level_count);

/// Alternating layers on the bare vacuum: odd layers e^{-i theta H_R} with the
/// all-to-all XY resource Hamiltonian, even layers e^{-i theta_j (delta/2) Z_j}
/// with one angle per qubit.
Ansatz hva_schwinger_ansatz(const ResourceParams& params, int n_layers,
                            int max_qubits = kDefaultDenseQubitCap);

struct EnergyVariance {
  double energy = 0.0;
  double variance = 0.0;
};

/// <H> and <H^2> - <H>^2 with H applied twice to the state.
EnergyVariance energy_and_variance(const PauliSum& h, const StateVector& s);
EnergyVariance energy_and_variance(const PauliSum& h, const Ansatz& a,
                                   std::span<const double> params);

struct VqeSample {
  int evaluation = 0;
  double energy = 0.0;
  double variance = 0.0;
  std::vector<double> params;
};

struct VqeResult {
  std::vector<double> best_params;
  double energy = 0.0;
  double variance = 0.0;
  int evaluations = 0;
  bool converged = false;
  std::vector<VqeSample> trace;
};

/// Minimizes <H> over the ansatz parameters.
VqeResult optimize(const PauliSum& h, const Ansatz& a, std::vector<double> initial,
                   const OptimizerOptions& options = {});

struct ScanPoint {
  double mass = 0.0;
  double energy = 0.0;
  double variance = 0.0;
  double order_parameter = 0.0;
  bool converged = false;
  int evaluations = 0;
  /// Zero-charge sector ground state from exact diagonalization; NaN when the
  /// oracle was not requested or the chain exceeds the dense cap.
  double oracle_energy = 0.0;
  double oracle_order_parameter = 0.0;
  double oracle_gap = 0.0;
};

struct ScanOptions {
  int n_layers = 6;
  ResourceParams layer_params{};  // n_sites is overwritten with the chain length
  OptimizerOptions optimizer{};
  /// Restarts used only at the largest mass; the others warm-start.
  int first_point_restarts = 2;
  bool dense_oracle = true;
  bool run_vqe = true;
};

/// VQE ground state of the Schwinger Hamiltonian at each mass (sorted
/// ascending) and the staggered order parameter of the result. Points are
/// optimized from the largest mass down, each warm-started from the optimum
/// of its upper neighbour; results are returned in ascending mass order.
std::vector<ScanPoint> phase_scan(std::span<const double> masses, const SchwingerParams& base,
                                  const ScanOptions& options);

/// Dense zero-charge ground state of the Schwinger Hamiltonian: energy, order
/// parameter and the gap to the next sector level.
struct SectorGroundState {
  double energy = 0.0;
  double order_parameter = 0.0;
  double gap = 0.0;
};
SectorGroundState schwinger_sector_ground_state(const SchwingerParams& params,
                                                int max_qubits = kDefaultDenseQubitCap);

/// Midpoint of the interval between consecutive masses with the largest
/// |d value / d mass|.
double steepest_change(std::span<const double> masses, std::span<const double> values);

}  // namespace lqs
