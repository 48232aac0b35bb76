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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lqs/dense.hpp"
#include "lqs/pauli.hpp"
#include "lqs/state.hpp"

namespace lqs {

/// First-order product formula for e^{-iHt}:
///   [prod_k e^{-i (t/N) c_k P_k}]^N
/// with the terms partitioned greedily (in construction order) into groups of
/// mutually commuting strings. Within a sweep, groups run in creation order;
/// the diagonal strings of a group are folded into a single phase multiply.
class EvolutionPlan {
 public:
  EvolutionPlan(PauliSum hamiltonian, double total_time, int steps);

  const PauliSum& hamiltonian() const { return hamiltonian_; }
  double total_time() const { return total_time_; }
  int steps() const { return steps_; }
  double step_size() const { return total_time_ / steps_; }

  /// Indices into hamiltonian().terms(), one vector per commuting group.
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }
  bool reversed_order() const { return reversed_; }

  /// Same partition with time -t and every sweep applied back to front, so
  /// running a plan and then its reversal is the identity up to rounding.
  EvolutionPlan reversed() const;

  /// One sweep e^{-i dt H} approximation applied in place.
  void apply_sweep(StateVector& s) const;

 private:
  struct Stage {
    bool diagonal = false;
    PauliTerm term{1, PauliString{}};  // unit coefficient, used when !diagonal
    double angle = 0.0;                // dt * coefficient
    std::vector<cplx> phases;          // per-basis phase, used when diagonal
  };

  void compile();

  PauliSum hamiltonian_;
  double total_time_;
  int steps_;
  bool reversed_ = false;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<Stage> stages_;
};

/// Applies plan.steps() sweeps to a copy of s0.
StateVector trotter_evolve(const EvolutionPlan& plan, const StateVector& s0);

/// e^{-iHt}|s0> from the block eigendecomposition of H.
StateVector exact_evolve(const PauliSum& h, double t, const StateVector& s0,
                         int max_qubits = kDefaultDenseQubitCap);

/// ||trotter_evolve(plan, s0) - exact_evolve(H, t, s0)||_2.
double trotter_error(const EvolutionPlan& plan, const StateVector& s0,
                     int max_qubits = kDefaultDenseQubitCap);

using TrajectoryVisitor = std::function<void(int step, double time, const StateVector& state)>;

/// Visits the initial state (step 0) and then every record_every-th sweep,
/// always including the last one.
void trotter_trajectory(const EvolutionPlan& plan, const StateVector& s0, int record_every,
                        const TrajectoryVisitor& visit);

/// Exact counterpart sampled at the same times as trotter_trajectory with the
/// same plan parameters.
void exact_trajectory(const PauliSum& h, double total_time, int steps, const StateVector& s0,
                      int record_every, const TrajectoryVisitor& visit,
                      int max_qubits = kDefaultDenseQubitCap);

/// Least-squares slope of log(errors) against log(steps). Non-positive
/// errors are rejected.
double loglog_slope(std::span<const int> steps, std::span<const double> errors);

}  // namespace lqs
