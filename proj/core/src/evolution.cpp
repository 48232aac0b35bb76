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

#include "lqs/evolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "lqs/errors.hpp"
#include "lqs/spectral.hpp"

namespace lqs {

EvolutionPlan::EvolutionPlan(PauliSum hamiltonian, double total_time, int steps)
    : hamiltonian_(std::move(hamiltonian)), total_time_(total_time), steps_(steps) {
  if (steps_ < 1) throw ContractError("Trotter steps must be >= 1, got " + std::to_string(steps_));
  if (!std::isfinite(total_time_)) throw ContractError("evolution time must be finite");

  const auto terms = hamiltonian_.terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    bool placed = false;
    for (auto& group : groups_) {
      const bool fits = std::all_of(group.begin(), group.end(), [&](std::size_t other) {
        return terms[k].commutes_with(terms[other]);
      });
      if (fits) {
        group.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) groups_.push_back({k});
  }

  for (const auto& group : groups_) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (!terms[group[a]].commutes_with(terms[group[b]])) {
          throw InvariantError("Trotter group contains non-commuting terms");
        }
      }
    }
  }
  compile();
}

void EvolutionPlan::compile() {
  stages_.clear();
  const double dt = step_size();
  const int n = hamiltonian_.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const auto terms = hamiltonian_.terms();
  bool offset_done = false;

  auto diagonal_stage = [&](const std::vector<std::size_t>& members, double offset) {
    std::vector<double> diag(dim, offset);
    for (auto k : members) {
      const auto z = terms[k].letters().z;
      const double c = terms[k].coefficient();
      for (std::uint64_t b = 0; b < dim; ++b) diag[b] += (std::popcount(b & z) & 1) ? -c : c;
    }
    Stage st;
    st.diagonal = true;
    st.phases.resize(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double phi = -dt * diag[b];
      st.phases[b] = cplx{std::cos(phi), std::sin(phi)};
    }
    return st;
  };

  for (const auto& group : groups_) {
    std::vector<std::size_t> diagonal;
    for (auto k : group) {
      if (terms[k].is_diagonal()) {
        diagonal.push_back(k);
      } else {
        Stage st;
        st.term = terms[k].with_coefficient(1.0);
        st.angle = dt * terms[k].coefficient();
        stages_.push_back(std::move(st));
      }
    }
    if (!diagonal.empty()) {
      stages_.push_back(diagonal_stage(diagonal, offset_done ? 0.0 : hamiltonian_.constant_offset()));
      offset_done = true;
    }
  }
  if (!offset_done && hamiltonian_.constant_offset() != 0.0) {
    stages_.push_back(diagonal_stage({}, hamiltonian_.constant_offset()));
  }
}

EvolutionPlan EvolutionPlan::reversed() const {
  EvolutionPlan out = *this;
  out.total_time_ = -total_time_;
  out.reversed_ = !reversed_;
  out.compile();
  return out;
}

void EvolutionPlan::apply_sweep(StateVector& s) const {
  if (s.n_qubits() != hamiltonian_.n_qubits()) {
    throw DimensionError("state has " + std::to_string(s.n_qubits()) + " qubits, plan expects " +
                         std::to_string(hamiltonian_.n_qubits()));
  }
  auto run = [&s](const Stage& st) {
    if (st.diagonal) {
      auto amps = s.amplitudes();
      for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= st.phases[b];
    } else {
      exp_term_apply_inplace(st.angle, st.term, s);
    }
  };
  if (reversed_) {
    for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) run(*it);
  } else {
    for (const auto& st : stages_) run(st);
  }
}

StateVector trotter_evolve(const EvolutionPlan& plan, const StateVector& s0) {
  StateVector s = s0;
  for (int k = 0; k < plan.steps(); ++k) plan.apply_sweep(s);
  return s;
}

StateVector exact_evolve(const PauliSum& h, double t, const StateVector& s0, int max_qubits) {
  if (h.n_qubits() != s0.n_qubits()) throw DimensionError("exact_evolve: qubit count mismatch");
  return ExactPropagator(h, max_qubits).evolve(t, s0);
}

double trotter_error(const EvolutionPlan& plan, const StateVector& s0, int max_qubits) {
  const auto exact = exact_evolve(plan.hamiltonian(), plan.total_time(), s0, max_qubits);
  return trotter_evolve(plan, s0).distance(exact);
}

namespace {

void check_record_every(int record_every) {
  if (record_every < 1) throw ContractError("record interval must be >= 1");
}

bool should_record(int step, int steps, int record_every) {
  return step % record_every == 0 || step == steps;
}

}  // namespace

void trotter_trajectory(const EvolutionPlan& plan, const StateVector& s0, int record_every,
                        const TrajectoryVisitor& visit) {
  check_record_every(record_every);
  StateVector s = s0;
  visit(0, 0.0, s);
  for (int k = 1; k <= plan.steps(); ++k) {
    plan.apply_sweep(s);
    if (should_record(k, plan.steps(), record_every)) visit(k, k * plan.step_size(), s);
  }
}

void exact_trajectory(const PauliSum& h, double total_time, int steps, const StateVector& s0,
                      int record_every, const TrajectoryVisitor& visit, int max_qubits) {
  check_record_every(record_every);
  if (steps < 1) throw ContractError("steps must be >= 1");
  const ExactPropagator propagator(h, max_qubits);
  const double dt = total_time / steps;
  visit(0, 0.0, s0);
  for (int k = 1; k <= steps; ++k) {
    if (should_record(k, steps, record_every)) visit(k, k * dt, propagator.evolve(k * dt, s0));
  }
}

double loglog_slope(std::span<const int> steps, std::span<const double> errors) {
  if (steps.size() != errors.size() || steps.size() < 2) {
    throw ContractError("slope fit needs at least two matching samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] <= 0 || !(errors[i] > 0.0)) throw ContractError("slope fit needs positive samples");
    const double x = std::log(static_cast<double>(steps[i]));
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace lqs
