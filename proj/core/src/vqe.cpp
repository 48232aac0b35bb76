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

#include "lqs/vqe.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "lqs/errors.hpp"
#include "lqs/fermion.hpp"
#include "lqs/spectral.hpp"

namespace lqs {

AnsatzLayer AnsatzLayer::global(PauliSum generator) {
  AnsatzLayer layer;
  layer.kind = Kind::kGlobal;
  layer.generators.push_back(std::move(generator));
  return layer;
}

AnsatzLayer AnsatzLayer::local(std::vector<PauliSum> generators) {
  AnsatzLayer layer;
  layer.kind = Kind::kLocal;
  layer.generators = std::move(generators);
  return layer;
}

struct Ansatz::Compiled {
  // kGlobal, commuting: unit strings and their coefficients.
  std::vector<PauliTerm> strings;
  std::vector<double> weights;
  double offset = 0.0;
  // kGlobal, non-commuting.
  std::unique_ptr<ExactPropagator> propagator;
  // kLocal: diagonal of every generator.
  std::vector<std::vector<double>> diagonals;
};

Ansatz::Ansatz(StateVector initial, std::vector<AnsatzLayer> layers, int max_qubits)
    : initial_(std::move(initial)), layers_(std::move(layers)) {
  if (std::abs(initial_.norm() - 1.0) > 1e-10) throw ContractError("ansatz initial state must be normalized");
  const int n = initial_.n_qubits();
  for (const auto& layer : layers_) {
    if (layer.generators.empty()) throw ContractError("ansatz layer without generators");
    if (layer.kind == AnsatzLayer::Kind::kGlobal && layer.generators.size() != 1) {
      throw ContractError("global ansatz layer takes exactly one generator");
    }
    auto compiled = std::make_unique<Compiled>();
    for (const auto& g : layer.generators) {
      if (g.n_qubits() != n) throw DimensionError("ansatz generator qubit count mismatch");
    }
    if (layer.kind == AnsatzLayer::Kind::kGlobal) {
      const auto& g = layer.generators.front();
      if (g.all_terms_commute()) {
        for (const auto& t : g.terms()) {
          compiled->strings.push_back(t.with_coefficient(1.0));
          compiled->weights.push_back(t.coefficient());
        }
        compiled->offset = g.constant_offset();
      } else {
        compiled->propagator = std::make_unique<ExactPropagator>(g, max_qubits);
      }
    } else {
      for (const auto& g : layer.generators) {
        if (!g.is_diagonal()) throw ContractError("local ansatz generators must be diagonal");
        const CompiledPauliSum c(g);
        compiled->diagonals.emplace_back(c.diagonal().begin(), c.diagonal().end());
      }
    }
    parameter_count_ += layer.arity();
    compiled_.push_back(std::move(compiled));
  }
}

Ansatz::~Ansatz() = default;
Ansatz::Ansatz(Ansatz&&) noexcept = default;
Ansatz& Ansatz::operator=(Ansatz&&) noexcept = default;

StateVector Ansatz::prepare(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != parameter_count_) {
    throw DimensionError("ansatz expects " + std::to_string(parameter_count_) +
                         " parameters, got " + std::to_string(params.size()));
  }
  StateVector s = initial_;
  std::size_t next = 0;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const auto& c = *compiled_[l];
    if (layers_[l].kind == AnsatzLayer::Kind::kGlobal) {
      const double theta = params[next++];
      if (c.propagator) {
        c.propagator->evolve_inplace(theta, s);
      } else {
        for (std::size_t k = 0; k < c.strings.size(); ++k) {
          exp_term_apply_inplace(theta * c.weights[k], c.strings[k], s);
        }
        if (c.offset != 0.0) s *= cplx{std::cos(theta * c.offset), -std::sin(theta * c.offset)};
      }
    } else {
      std::vector<double> total(s.dimension(), 0.0);
      for (const auto& diag : c.diagonals) {
        const double theta = params[next++];
        for (std::size_t b = 0; b < total.size(); ++b) total[b] += theta * diag[b];
      }
      apply_diagonal_phase(1.0, total, s);
    }
  }
  return s;
}

Ansatz ucc_deuteron_ansatz(int level_count) {
  if (level_count != 2 && level_count != 3) {
    throw ContractError("UCC deuteron ansatz supports 2 or 3 levels, got " +
                        std::to_string(level_count));
  }
  std::vector<AnsatzLayer> layers;
  if (level_count == 3) layers.push_back(AnsatzLayer::global(jw_excitation_generator(0, 2, 3)));
  layers.push_back(AnsatzLayer::global(jw_excitation_generator(0, 1, level_count)));
  return Ansatz(StateVector::basis(level_count, 1), std::move(layers));
}

Ansatz hva_schwinger_ansatz(const ResourceParams& params, int n_layers, int max_qubits) {
  params.validate();
  if (n_layers < 1) throw ContractError("ansatz needs at least one layer, got " + std::to_string(n_layers));
  const int n = params.n_sites;
  const PauliSum resource = build_resource_xy(params);
  std::vector<PauliSum> locals;
  for (int q = 0; q < n; ++q) locals.push_back(local_z(q, params.delta, n));
  std::vector<AnsatzLayer> layers;
  for (int l = 1; l <= n_layers; ++l) {
    layers.push_back(l % 2 == 1 ? AnsatzLayer::global(resource) : AnsatzLayer::local(locals));
  }
  return Ansatz(bare_vacuum(n), std::move(layers), max_qubits);
}

EnergyVariance energy_and_variance(const PauliSum& h, const StateVector& s) {
  if (h.n_qubits() != s.n_qubits()) throw DimensionError("energy_and_variance: qubit count mismatch");
  const CompiledPauliSum compiled(h);
  const StateVector phi = compiled.apply(s);
  const cplx e = s.inner(phi);
  if (std::abs(e.imag()) > 1e-10) throw InvariantError("energy has an imaginary part");
  const double h2 = phi.inner(phi).real();
  return {e.real(), h2 - e.real() * e.real()};
}

EnergyVariance energy_and_variance(const PauliSum& h, const Ansatz& a,
                                   std::span<const double> params) {
  return energy_and_variance(h, a.prepare(params));
}

VqeResult optimize(const PauliSum& h, const Ansatz& a, std::vector<double> initial,
                   const OptimizerOptions& options) {
  if (h.n_qubits() != a.n_qubits()) throw DimensionError("Hamiltonian and ansatz sizes differ");
  if (static_cast<int>(initial.size()) != a.parameter_count()) {
    throw DimensionError("initial point has " + std::to_string(initial.size()) +
                         " entries, ansatz expects " + std::to_string(a.parameter_count()));
  }
  const CompiledPauliSum compiled(h);
  std::vector<double> variances;
  const Objective objective = [&](std::span<const double> p) {
    const StateVector s = a.prepare(p);
    const StateVector phi = compiled.apply(s);
    const double e = s.inner(phi).real();
    variances.push_back(phi.inner(phi).real() - e * e);
    return e;
  };
  const OptimizeResult opt = minimize(objective, std::move(initial), options);

  VqeResult result;
  result.best_params = opt.best_params;
  result.evaluations = opt.evaluations;
  result.converged = opt.converged;
  result.trace.reserve(opt.trace.size());
  for (const auto& sample : opt.trace) {
    result.trace.push_back({sample.evaluation, sample.value,
                            variances[static_cast<std::size_t>(sample.evaluation - 1)],
                            sample.params});
  }
  const auto ev = energy_and_variance(h, a, result.best_params);
  result.energy = ev.energy;
  result.variance = ev.variance;
  if (result.variance < -1e-10) throw InvariantError("negative energy variance");
  return result;
}

SectorGroundState schwinger_sector_ground_state(const SchwingerParams& params, int max_qubits) {
  const PauliSum h = build_schwinger(params);
  const int n = params.n_sites;
  const SectorSpectrum sector = sector_spectrum(h, n / 2, max_qubits);
  const StateVector ground = sector.eigenstate(0);
  SectorGroundState out;
  out.energy = sector.energies(0);
  out.order_parameter = expectation(staggered_order_operator(n), ground);
  out.gap = sector.energies.size() > 1 ? sector.energies(1) - sector.energies(0) : 0.0;
  return out;
}

std::vector<ScanPoint> phase_scan(std::span<const double> masses, const SchwingerParams& base,
                                  const ScanOptions& options) {
  if (masses.empty()) throw ContractError("phase scan needs at least one mass");
  for (std::size_t i = 1; i < masses.size(); ++i) {
    if (!(masses[i] > masses[i - 1])) throw ContractError("phase scan masses must be strictly ascending");
  }
  base.validate();
  const int n = base.n_sites;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  ResourceParams layer_params = options.layer_params;
  layer_params.n_sites = n;
  std::unique_ptr<Ansatz> ansatz;
  std::vector<double> params;
  if (options.run_vqe) {
    ansatz = std::make_unique<Ansatz>(hva_schwinger_ansatz(layer_params, options.n_layers));
    params.assign(static_cast<std::size_t>(ansatz->parameter_count()), 0.0);
  }
  const PauliSum order = staggered_order_operator(n);

  // Warm starts run from the largest mass down: the bare vacuum, which is the
  // ansatz reference state, is the ground state in the large-mass limit.
  std::vector<ScanPoint> out(masses.size());
  for (std::size_t step = 0; step < masses.size(); ++step) {
    const std::size_t i = masses.size() - 1 - step;
    SchwingerParams p = base;
    p.mass = masses[i];
    ScanPoint point;
    point.mass = p.mass;
    point.energy = point.variance = point.order_parameter = nan;
    point.oracle_energy = point.oracle_order_parameter = point.oracle_gap = nan;
    if (options.run_vqe) {
      OptimizerOptions opt = options.optimizer;
      opt.restarts = step == 0 ? options.first_point_restarts : 0;
      const PauliSum h = build_schwinger(p);
      const VqeResult r = optimize(h, *ansatz, params, opt);
      params = r.best_params;
      point.energy = r.energy;
      point.variance = r.variance;
      point.order_parameter = expectation(order, ansatz->prepare(params));
      point.converged = r.converged;
      point.evaluations = r.evaluations;
    }
    if (options.dense_oracle && n <= kDefaultDenseQubitCap) {
      const auto g = schwinger_sector_ground_state(p);
      point.oracle_energy = g.energy;
      point.oracle_order_parameter = g.order_parameter;
      point.oracle_gap = g.gap;
    }
    out[i] = point;
  }
  return out;
}

double steepest_change(std::span<const double> masses, std::span<const double> values) {
  if (masses.size() != values.size() || masses.size() < 2) {
    throw ContractError("steepest_change needs at least two matching samples");
  }
  std::size_t best = 0;
  double best_slope = -1.0;
  for (std::size_t i = 0; i + 1 < masses.size(); ++i) {
    const double dm = masses[i + 1] - masses[i];
    if (!(dm > 0.0)) throw ContractError("masses must be strictly ascending");
    const double slope = std::abs((values[i + 1] - values[i]) / dm);
    if (slope > best_slope) {
      best_slope = slope;
      best = i;
    }
  }
  return 0.5 * (masses[best] + masses[best + 1]);
}

}  // namespace lqs
