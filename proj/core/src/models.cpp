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

#include "lqs/models.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "lqs/errors.hpp"
#include "lqs/fermion.hpp"

namespace lqs {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ContractError(message);
}

bool finite(double v) { return std::isfinite(v); }

PauliString z_on(int qubit) { return PauliString{0, std::uint64_t{1} << qubit}; }

PauliString zz_on(int a, int b) {
  return PauliString{0, (std::uint64_t{1} << a) | (std::uint64_t{1} << b)};
}

PauliString pair_on(int a, int b, char letter) {
  const std::uint64_t m = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  return letter == 'X' ? PauliString{m, 0} : PauliString{m, m};
}

double flux_scale(FluxNormalization f) { return f == FluxNormalization::kGaussLaw ? 0.5 : 1.0; }

}  // namespace

void SchwingerParams::validate() const {
  require(n_sites >= 2 && n_sites % 2 == 0,
          "Schwinger n_sites must be even and >= 2, got " + std::to_string(n_sites));
  require(n_sites <= kMaxQubits, "Schwinger n_sites too large");
  require(finite(mass) && finite(coupling) && finite(boundary_field), "Schwinger parameters must be finite");
  require(finite(spacing) && spacing > 0.0, "Schwinger spacing must be positive");
}

void ThirringParams::validate() const {
  require(n_sites >= 2 && n_sites <= kMaxQubits,
          "Thirring n_sites must be >= 2, got " + std::to_string(n_sites));
  require(finite(mass) && finite(coupling), "Thirring parameters must be finite");
}

void ResourceParams::validate() const {
  require(n_sites >= 2 && n_sites <= kMaxQubits, "resource n_sites must be >= 2");
  require(finite(alpha) && alpha > 0.0 && alpha < 3.0,
          "resource alpha must lie in (0, 3), got " + std::to_string(alpha));
  require(finite(j0) && finite(b_field) && finite(delta), "resource parameters must be finite");
}

PauliSum flux_operator(int bond, const SchwingerParams& params) {
  params.validate();
  const int n = params.n_sites;
  require(bond >= 1 && bond <= n - 1, "bond index must be in [1, N-1]");
  const double f = flux_scale(params.flux);
  PauliSum flux(n);
  flux.add_constant(params.boundary_field);
  for (int site = 1; site <= bond; ++site) {
    flux.add(z_on(site - 1), -f);
    flux.add_constant(-f * staggered_sign(site));
  }
  return flux;
}

PauliSum build_schwinger(const SchwingerParams& params) {
  params.validate();
  const int n = params.n_sites;
  const double a = params.spacing;
  const double g2 = params.coupling * params.coupling;
  PauliSum h(n);

  for (int q = 0; q + 1 < n; ++q) h += jw_hopping(q, q + 1, 1.0 / (2.0 * a), n);

  for (int site = 1; site <= n; ++site) {
    h.add(z_on(site - 1), 0.5 * params.mass * staggered_sign(site));
  }

  // (g^2 a / 2) L_j^2, squared symbolically so Z^2 = I folds into constants.
  for (int bond = 1; bond <= n - 1; ++bond) {
    const PauliOperator flux(flux_operator(bond, params));
    h += (0.5 * g2 * a) * (flux * flux).to_hermitian();
  }
  return h;
}

std::uint64_t bare_vacuum_index(int n_sites) {
  require(n_sites >= 2 && n_sites % 2 == 0,
          "bare vacuum needs an even number of sites, got " + std::to_string(n_sites));
  std::uint64_t index = 0;
  for (int site = 2; site <= n_sites; site += 2) index |= std::uint64_t{1} << (site - 1);
  return index;
}

StateVector bare_vacuum(int n_sites) {
  return StateVector::basis(n_sites, bare_vacuum_index(n_sites));
}

double particle_density(const StateVector& s, int n_sites) {
  if (s.n_qubits() != n_sites) {
    throw DimensionError("particle_density: state has " + std::to_string(s.n_qubits()) +
                         " qubits, expected " + std::to_string(n_sites));
  }
  const std::uint64_t vacuum = bare_vacuum_index(n_sites);
  const auto amps = s.amplitudes();
  double acc = 0.0;
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const double p = std::norm(amps[b]);
    if (p != 0.0) acc += p * std::popcount(b ^ vacuum);
  }
  return acc / n_sites;
}

PauliSum charge_operator(int n_sites) {
  PauliSum q(n_sites);
  for (int site = 1; site <= n_sites; ++site) {
    q.add(z_on(site - 1), -0.5);
    q.add_constant(-0.5 * staggered_sign(site));
  }
  return q;
}

PauliSum staggered_order_operator(int n_sites) {
  PauliSum o(n_sites);
  for (int site = 1; site <= n_sites; ++site) {
    o.add(z_on(site - 1), staggered_sign(site) / n_sites);
  }
  return o;
}

std::vector<double> reconstruct_efield(std::span<const int> occupation,
                                       const SchwingerParams& params) {
  params.validate();
  if (static_cast<int>(occupation.size()) != params.n_sites) {
    throw DimensionError("occupation pattern has " + std::to_string(occupation.size()) +
                         " sites, expected " + std::to_string(params.n_sites));
  }
  std::vector<double> flux;
  flux.reserve(occupation.size() - 1);
  double value = params.boundary_field;
  for (int site = 1; site < params.n_sites; ++site) {
    const int bit = occupation[static_cast<std::size_t>(site - 1)];
    require(bit == 0 || bit == 1, "occupation entries must be 0 or 1");
    const double z = 1.0 - 2.0 * bit;
    value -= 0.5 * (z + staggered_sign(site));
    flux.push_back(value);
  }
  return flux;
}

std::vector<double> reconstruct_efield(std::string_view occupation, const SchwingerParams& params) {
  std::vector<int> bits;
  bits.reserve(occupation.size());
  for (char c : occupation) {
    require(c == '0' || c == '1', "occupation pattern may only contain '0' and '1'");
    bits.push_back(c - '0');
  }
  return reconstruct_efield(std::span<const int>(bits), params);
}

PauliSum build_thirring(const ThirringParams& params) {
  params.validate();
  const int n = params.n_sites;
  PauliSum h(n);
  for (int site = 1; site < n; ++site) {
    const double c = -staggered_sign(site) / 4.0;  // (-1)^{j+1}/4
    h.add(pair_on(site - 1, site, 'X'), c);
    h.add(pair_on(site - 1, site, 'Y'), c);
  }
  for (int site = 1; site <= n; ++site) {
    h.add(z_on(site - 1), staggered_sign(site) * params.mass / 2.0);
  }
  const double g2 = params.coupling * params.coupling;
  for (int site = 1; site < n; ++site) h.add(zz_on(site - 1, site), g2 / 4.0);
  return h;
}

PauliSum build_thirring_fermionic(const ThirringParams& params) {
  params.validate();
  const int n = params.n_sites;
  const double m = params.mass;
  const double g2 = params.coupling * params.coupling;
  std::vector<FermionOp> ops;
  PauliSum constants(n);
  for (int site = 1; site < n; ++site) {
    ops.push_back({FermionKind::kHop, {site - 1, site}, -staggered_sign(site) / 2.0});
  }
  for (int site = 1; site <= n; ++site) {
    ops.push_back({FermionKind::kNumber, {site - 1, 0}, -m * staggered_sign(site)});
    constants.add_constant(0.5 * m * staggered_sign(site));
  }
  // (n_j - 1/2)(n_{j+1} - 1/2) = n_j n_{j+1} - n_j/2 - n_{j+1}/2 + 1/4
  for (int site = 1; site < n; ++site) {
    ops.push_back({FermionKind::kDensityDensity, {site - 1, site}, g2});
    ops.push_back({FermionKind::kNumber, {site - 1, 0}, -g2 / 2.0});
    ops.push_back({FermionKind::kNumber, {site, 0}, -g2 / 2.0});
    constants.add_constant(g2 / 4.0);
  }
  return jw_map_hermitian(ops, n) + constants;
}

PauliSum build_deuteron(const DeuteronSpec& spec) {
  if (spec.level_count != 2 && spec.level_count != 3) {
    throw ContractError("deuteron Hamiltonian available for 2 or 3 levels, got " +
                        std::to_string(spec.level_count));
  }
  const int n = spec.level_count;
  PauliSum h(n);
  h.add_constant(5.906709);
  h.add(z_on(0), 0.218291);
  h.add(z_on(1), -6.125);
  h.add(pair_on(0, 1, 'X'), -2.143304);
  h.add(pair_on(0, 1, 'Y'), -2.143304);
  if (n == 3) {
    h.add_constant(9.625);
    h.add(z_on(2), -9.625);
    h.add(pair_on(1, 2, 'X'), 3.913119);
    h.add(pair_on(1, 2, 'Y'), 3.913119);
  }
  return h;
}

double resource_coupling(const ResourceParams& params, int i, int j) {
  require(i != j, "resource coupling needs distinct sites");
  return params.j0 / std::pow(std::abs(i - j), params.alpha);
}

PauliSum build_resource_xy(const ResourceParams& params) {
  params.validate();
  const int n = params.n_sites;
  PauliSum h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double half = resource_coupling(params, i, j) / 2.0;
      h.add(pair_on(i, j, 'X'), half);
      h.add(pair_on(i, j, 'Y'), half);
    }
  }
  for (int q = 0; q < n; ++q) h.add(z_on(q), params.b_field);
  return h;
}

PauliSum local_z(int qubit, double delta, int n_sites) {
  require(qubit >= 0 && qubit < n_sites, "local_z qubit out of range");
  PauliSum h(n_sites);
  h.add(z_on(qubit), delta / 2.0);
  return h;
}

}  // namespace lqs
