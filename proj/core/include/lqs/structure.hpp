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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lqs/dense.hpp"
#include "lqs/models.hpp"
#include "lqs/pauli.hpp"
#include "lqs/state.hpp"

// Hadron states and their time-separated correlators.

namespace lqs {

struct SectorSpec {
  /// Set bits minus N/2: fermions minus antifermions relative to the bare vacuum.
  int total_charge = 0;
  /// Requested lattice momentum. Open chains carry no translation symmetry, so
  /// this is recorded but never used to select a state.
  std::optional<int> momentum_index;
  int energy_rank = 0;
};

struct SectorState {
  StateVector state;
  double energy = 0.0;
  int total_charge = 0;
  bool momentum_resolved = false;
};

/// Eigenstate of h with the requested charge and rank, from exact
/// diagonalization of the sector. Requires an even number of qubits.
SectorState prepare_sector_state(const PauliSum& h, const SectorSpec& sector,
                                 int max_qubits = kDefaultDenseQubitCap);

/// Piecewise-constant interpolation (1 - s) h_start + s h_target over
/// `segments` equal slices of total_time, each slice one Trotter sweep.
StateVector adiabatic_prepare(const PauliSum& h_start, const PauliSum& h_target,
                              const StateVector& start, double total_time, int segments);

struct CorrelatorRequest {
  PauliSum op_a;
  PauliSum op_b;
  std::vector<double> times;
  std::vector<int> positions;

  void validate() const;
};

/// Values laid out row-major by position, then time.
struct CorrelatorTable {
  std::vector<int> positions;
  std::vector<double> times;
  std::vector<cplx> values;

  cplx at(std::size_t position_index, std::size_t time_index) const {
    return values[position_index * times.size() + time_index];
  }
  cplx& at(std::size_t position_index, std::size_t time_index) {
    return values[position_index * times.size() + time_index];
  }
};

struct PropagationOptions {
  int max_qubits = kDefaultDenseQubitCap;
  /// Use the product formula even when the exact propagator fits.
  bool force_trotter = false;
  /// Trotter sweeps per time point on the product-formula path.
  int trotter_steps = 256;
  int threads = 0;
};

/// C(y, t) = <psi| e^{iHt} A_y e^{-iHt} B |psi> with A_y = op_a shifted by y sites.
/// Throws BoundaryError when a shift leaves the chain.
CorrelatorTable two_point(const PauliSum& h, const StateVector& psi, const CorrelatorRequest& req,
                          const PropagationOptions& options = {});

/// Same as two_point with an explicit operator per position.
CorrelatorTable correlate(const PauliSum& h, const StateVector& psi,
                          std::span<const PauliSum> ops_a, std::span<const int> positions,
                          const PauliSum& op_b, std::span<const double> times,
                          const PropagationOptions& options = {});

struct SpectralTable {
  std::vector<double> grid;
  std::vector<cplx> values;
  std::map<std::string, std::string> metadata;
};

/// f(x) = sqrt(P+/2pi) sum_y dy e^{i x P+ y} C(y) on the grid
/// x_j = 2 pi j / (M dy P+), j = -floor(M/2) .. ceil(M/2) - 1, which makes the
/// transform unitary: sum_x |f|^2 dx = sum_y |C|^2 dy.
SpectralTable pdf_transform(std::span<const int> positions, std::span<const cplx> correlator,
                            double p_plus, double site_spacing = 1.0);
SpectralTable pdf_transform(const CorrelatorTable& table, std::size_t time_index, double p_plus,
                            double site_spacing = 1.0);

/// (n_0 + n_1 + c_0^dag c_1 + c_1^dag c_0)/sqrt(2) on the two sites of a
/// staggered cell starting at `first_site` (0-based qubit).
PauliSum default_pdf_bilinear(int n_sites, int first_site = 0);

using CurrentBuilder = std::function<PauliSum(int site)>;

/// -(Z_j + (-1)^j)/2 on qubit `site` (1-based sign convention of models.hpp).
PauliSum charge_density(int site, int n_sites);

/// Current on the bond (site, site+1) fixed by the continuity equation of
/// `hopping_bond`: J = i [rho_site, H_bond]. Throws BoundaryError on the last site.
PauliSum bond_current(int site, const PauliSum& hopping_bond);

/// Charge density (component 0) or bond current (component 1) of the
/// Thirring hopping term.
CurrentBuilder thirring_current(const ThirringParams& params, int component);

struct HadronicRequest {
  CurrentBuilder current_a;
  CurrentBuilder current_b;
  int origin = 0;
  std::vector<int> positions;
  std::vector<double> times;
  double omega = 0.0;
  std::vector<double> momenta;
};

/// Time-ordered correlator G(y, t) = <psi| T{J_a(origin + y, t) J_b(origin, 0)} |psi>,
/// with T{A(t)B} = B A(t) for t < 0.
CorrelatorTable time_ordered_correlator(const PauliSum& h, const StateVector& psi,
                                        const HadronicRequest& req,
                                        const PropagationOptions& options = {});

/// S(omega, k) = sum_{y,t} dy dt e^{i(omega t - k y)} G(y, t) on the momentum grid.
/// The hadronic tensor W(omega, k) is the real part of each value.
SpectralTable hadronic_tensor(const PauliSum& h, const StateVector& psi, const HadronicRequest& req,
                              const PropagationOptions& options = {});

/// Fourier sum used by hadronic_tensor, exposed for tables computed elsewhere.
SpectralTable hadronic_transform(const CorrelatorTable& ordered, double omega,
                                 std::span<const double> momenta, double site_spacing = 1.0);

}  // namespace lqs
