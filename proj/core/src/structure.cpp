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

#include "lqs/structure.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "lqs/errors.hpp"
#include "lqs/evolution.hpp"
#include "lqs/fermion.hpp"
#include "lqs/numfmt.hpp"
#include "lqs/parallel.hpp"
#include "lqs/spectral.hpp"

namespace lqs {

namespace {

template <class T>
double uniform_spacing(std::span<const T> grid, const char* what) {
  if (grid.empty()) throw ContractError(std::string(what) + " grid is empty");
  if (grid.size() == 1) return 1.0;
  const double step = static_cast<double>(grid[1]) - static_cast<double>(grid[0]);
  if (!(step > 0.0)) throw ContractError(std::string(what) + " grid must be strictly increasing");
  for (std::size_t i = 2; i < grid.size(); ++i) {
    const double d = static_cast<double>(grid[i]) - static_cast<double>(grid[i - 1]);
    if (std::abs(d - step) > 1e-12 * std::max(1.0, std::abs(step))) {
      throw ContractError(std::string(what) + " grid is not uniformly spaced");
    }
  }
  return step;
}

}  // namespace

SectorState prepare_sector_state(const PauliSum& h, const SectorSpec& sector, int max_qubits) {
  const int n = h.n_qubits();
  if (n % 2 != 0) throw ContractError("charge sectors need an even number of sites");
  const int weight = sector.total_charge + n / 2;
  if (weight < 0 || weight > n) {
    throw EmptySectorError("no states with total charge " + std::to_string(sector.total_charge) +
                           " on " + std::to_string(n) + " sites");
  }
  const SectorSpectrum spectrum = sector_spectrum(h, weight, max_qubits);
  if (sector.energy_rank < 0 || sector.energy_rank >= spectrum.energies.size()) {
    throw EmptySectorError("energy rank " + std::to_string(sector.energy_rank) +
                           " not present in a sector of " +
                           std::to_string(spectrum.energies.size()) + " states");
  }
  SectorState out{spectrum.eigenstate(sector.energy_rank), spectrum.energies(sector.energy_rank),
                  sector.total_charge, false};
  return out;
}

StateVector adiabatic_prepare(const PauliSum& h_start, const PauliSum& h_target,
                              const StateVector& start, double total_time, int segments) {
  if (segments < 1) throw ContractError("adiabatic schedule needs at least one segment");
  if (!(total_time > 0.0)) throw ContractError("adiabatic time must be positive");
  const double dt = total_time / segments;
  StateVector s = start;
  for (int k = 0; k < segments; ++k) {
    const double frac = (k + 0.5) / segments;
    const PauliSum h = (1.0 - frac) * h_start + frac * h_target;
    EvolutionPlan(h, dt, 1).apply_sweep(s);
  }
  return s;
}

void CorrelatorRequest::validate() const {
  if (op_a.n_qubits() != op_b.n_qubits()) throw DimensionError("correlator operators differ in size");
  uniform_spacing(std::span<const double>(times), "time");
  uniform_spacing(std::span<const int>(positions), "position");
}

CorrelatorTable correlate(const PauliSum& h, const StateVector& psi,
                          std::span<const PauliSum> ops_a, std::span<const int> positions,
                          const PauliSum& op_b, std::span<const double> times,
                          const PropagationOptions& options) {
  const int n = h.n_qubits();
  if (psi.n_qubits() != n || op_b.n_qubits() != n) throw DimensionError("correlator size mismatch");
  if (ops_a.size() != positions.size()) throw DimensionError("one operator per position required");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw ContractError("correlator state must be normalized");

  std::vector<CompiledPauliSum> compiled_a;
  compiled_a.reserve(ops_a.size());
  for (const auto& a : ops_a) {
    if (a.n_qubits() != n) throw DimensionError("correlator size mismatch");
    compiled_a.emplace_back(a);
  }
  const StateVector b_psi = apply(op_b, psi);

  std::unique_ptr<ExactPropagator> exact;
  const bool use_trotter = options.force_trotter || n > options.max_qubits;
  if (!use_trotter) exact = std::make_unique<ExactPropagator>(h, options.max_qubits);

  CorrelatorTable table;
  table.positions.assign(positions.begin(), positions.end());
  table.times.assign(times.begin(), times.end());
  table.values.assign(positions.size() * times.size(), cplx{0.0, 0.0});

  parallel_for(times.size(), [&](std::size_t it) {
    const double t = times[it];
    StateVector left = psi;
    StateVector right = b_psi;
    if (t != 0.0) {
      if (use_trotter) {
        const EvolutionPlan plan(h, t, options.trotter_steps);
        left = trotter_evolve(plan, left);
        right = trotter_evolve(plan, right);
      } else {
        exact->evolve_inplace(t, left);
        exact->evolve_inplace(t, right);
      }
    }
    for (std::size_t iy = 0; iy < compiled_a.size(); ++iy) {
      table.at(iy, it) = left.inner(compiled_a[iy].apply(right));
    }
  }, options.threads);
  return table;
}

CorrelatorTable two_point(const PauliSum& h, const StateVector& psi, const CorrelatorRequest& req,
                          const PropagationOptions& options) {
  req.validate();
  std::vector<PauliSum> ops;
  ops.reserve(req.positions.size());
  for (int y : req.positions) ops.push_back(translate(req.op_a, y));
  return correlate(h, psi, ops, req.positions, req.op_b, req.times, options);
}

SpectralTable pdf_transform(std::span<const int> positions, std::span<const cplx> correlator,
                            double p_plus, double site_spacing) {
  if (positions.size() != correlator.size()) throw DimensionError("one correlator value per position");
  if (!(p_plus > 0.0)) throw ContractError("P+ must be positive");
  if (!(site_spacing > 0.0)) throw ContractError("site spacing must be positive");
  const double dy = uniform_spacing(positions, "position") * site_spacing;
  const auto m = static_cast<long>(positions.size());
  const double norm = std::sqrt(p_plus / (2.0 * std::numbers::pi));

  SpectralTable out;
  for (long j = -(m / 2); j < m - m / 2; ++j) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(j) / (m * dy * p_plus);
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const double y = positions[k] * site_spacing;
      const double phase = x * p_plus * y;
      acc += cplx{std::cos(phase), std::sin(phase)} * correlator[k];
    }
    out.grid.push_back(x);
    out.values.push_back(norm * dy * acc);
  }
  out.metadata["quadrature"] = "rectangle, weight dy per position";
  out.metadata["dy"] = format_double(dy);
  out.metadata["dx"] = format_double(2.0 * std::numbers::pi / (m * dy * p_plus));
  out.metadata["p_plus"] = format_double(p_plus);
  out.metadata["kernel"] = "sqrt(P+/2pi) exp(+i x P+ y)";
  return out;
}

SpectralTable pdf_transform(const CorrelatorTable& table, std::size_t time_index, double p_plus,
                            double site_spacing) {
  if (time_index >= table.times.size()) throw ContractError("time index outside correlator table");
  std::vector<cplx> slice;
  slice.reserve(table.positions.size());
  for (std::size_t iy = 0; iy < table.positions.size(); ++iy) slice.push_back(table.at(iy, time_index));
  auto out = pdf_transform(table.positions, slice, p_plus, site_spacing);
  out.metadata["t"] = format_double(table.times[time_index]);
  return out;
}

PauliSum default_pdf_bilinear(int n_sites, int first_site) {
  if (first_site < 0 || first_site + 1 >= n_sites) throw BoundaryError("bilinear cell leaves the chain");
  const double s = 1.0 / std::sqrt(2.0);
  return s * (jw_number(first_site, n_sites) + jw_number(first_site + 1, n_sites)) +
         jw_hopping(first_site, first_site + 1, s, n_sites);
}

PauliSum charge_density(int site, int n_sites) {
  if (site < 0 || site >= n_sites) throw BoundaryError("charge density site outside the chain");
  PauliSum rho(n_sites);
  rho.add(PauliString{0, std::uint64_t{1} << site}, -0.5);
  rho.add_constant(-0.5 * staggered_sign(site + 1));
  return rho;
}

PauliSum bond_current(int site, const PauliSum& hopping_bond) {
  const int n = hopping_bond.n_qubits();
  if (site < 0 || site + 1 >= n) throw BoundaryError("bond current needs a site to the right");
  const PauliOperator rho(charge_density(site, n));
  return (cplx{0.0, 1.0} * commutator(rho, PauliOperator(hopping_bond))).to_hermitian();
}

CurrentBuilder thirring_current(const ThirringParams& params, int component) {
  params.validate();
  const int n = params.n_sites;
  if (component == 0) return [n](int site) { return charge_density(site, n); };
  if (component == 1) {
    return [n](int site) {
      if (site < 0 || site + 1 >= n) throw BoundaryError("bond current needs a site to the right");
      // Thirring hopping on (site, site+1): (-1)^{j+1}/2 (c^dag c + h.c.), j = site + 1.
      const double c = -staggered_sign(site + 1) / 2.0;
      return bond_current(site, jw_hopping(site, site + 1, c, n));
    };
  }
  throw ContractError("current component must be 0 or 1, got " + std::to_string(component));
}

CorrelatorTable time_ordered_correlator(const PauliSum& h, const StateVector& psi,
                                        const HadronicRequest& req,
                                        const PropagationOptions& options) {
  if (!req.current_a || !req.current_b) throw ContractError("hadronic request needs both currents");
  uniform_spacing(std::span<const int>(req.positions), "position");
  uniform_spacing(std::span<const double>(req.times), "time");
  std::vector<PauliSum> ops;
  ops.reserve(req.positions.size());
  for (int y : req.positions) ops.push_back(req.current_a(req.origin + y));
  const PauliSum b = req.current_b(req.origin);

  // For t < 0 the ordered product is B A(t), and <B A(t)> = conj(<A(t) B>) for
  // Hermitian currents.
  CorrelatorTable table = correlate(h, psi, ops, req.positions, b, req.times, options);
  for (std::size_t it = 0; it < table.times.size(); ++it) {
    if (table.times[it] >= 0.0) continue;
    for (std::size_t iy = 0; iy < table.positions.size(); ++iy) {
      table.at(iy, it) = std::conj(table.at(iy, it));
    }
  }
  return table;
}

SpectralTable hadronic_transform(const CorrelatorTable& ordered, double omega,
                                 std::span<const double> momenta, double site_spacing) {
  const double dy = uniform_spacing(std::span<const int>(ordered.positions), "position") * site_spacing;
  const double dt = uniform_spacing(std::span<const double>(ordered.times), "time");
  if (momenta.empty()) throw ContractError("momentum grid is empty");
  for (std::size_t i = 1; i < momenta.size(); ++i) {
    if (!(momenta[i] > momenta[i - 1])) throw ContractError("momentum grid must be increasing");
  }
  SpectralTable out;
  for (double k : momenta) {
    cplx acc{0.0, 0.0};
    for (std::size_t iy = 0; iy < ordered.positions.size(); ++iy) {
      const double y = ordered.positions[iy] * site_spacing;
      for (std::size_t it = 0; it < ordered.times.size(); ++it) {
        const double phase = omega * ordered.times[it] - k * y;
        acc += cplx{std::cos(phase), std::sin(phase)} * ordered.at(iy, it);
      }
    }
    out.grid.push_back(k);
    out.values.push_back(dy * dt * acc);
  }
  out.metadata["quadrature"] = "rectangle, weight dy*dt per (y, t)";
  out.metadata["omega"] = format_double(omega);
  out.metadata["dy"] = format_double(dy);
  out.metadata["dt"] = format_double(dt);
  out.metadata["kernel"] = "exp(+i (omega t - k y))";
  return out;
}

SpectralTable hadronic_tensor(const PauliSum& h, const StateVector& psi, const HadronicRequest& req,
                              const PropagationOptions& options) {
  return hadronic_transform(time_ordered_correlator(h, psi, req, options), req.omega, req.momenta);
}

}  // namespace lqs
