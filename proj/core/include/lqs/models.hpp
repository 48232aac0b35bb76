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

#include <string_view>
#include <vector>

#include "lqs/pauli.hpp"
#include "lqs/state.hpp"

// Lattice model Hamiltonians on open chains.
//
// Sites are numbered 1..N in the physics formulas and live on qubits 0..N-1;
// every staggered sign (-1)^j below uses the 1-based site number. The bare
// vacuum is |0101...>: odd sites empty (Z = +1), even sites filled (Z = -1).

namespace lqs {

/// (-1)^site for a 1-based site number.
constexpr double staggered_sign(int site) { return (site % 2 == 0) ? 1.0 : -1.0; }

/// Scale of the cumulative charge inside the electric-flux operator.
enum class FluxNormalization {
  /// L_j = eps0 - (1/2) sum_{i<=j} (Z_i + (-1)^i): the Gauss-law flux, unit
  /// flux per fermion-antifermion pair.
  kGaussLaw,
  /// L_j = eps0 - sum_{i<=j} (Z_i + (-1)^i): twice the Gauss-law charge sum.
  kUnhalved,
};

struct SchwingerParams {
  int n_sites = 4;
  double mass = 0.0;
  double coupling = 1.0;
  double spacing = 1.0;
  double boundary_field = 0.0;
  FluxNormalization flux = FluxNormalization::kGaussLaw;

  void validate() const;
};

struct ThirringParams {
  int n_sites = 4;
  double mass = 0.0;
  double coupling = 0.0;

  void validate() const;
};

struct DeuteronSpec {
  int level_count = 2;
};

struct ResourceParams {
  int n_sites = 4;
  double j0 = 1.0;
  double alpha = 1.0;
  double b_field = 0.0;
  double delta = 1.0;

  void validate() const;
};

/// Gauge-eliminated Schwinger Hamiltonian: XX+YY hopping at 1/(4a),
/// staggered mass (m/2)(-1)^j Z_j and the electric energy (g^2 a / 2) sum_j L_j^2
/// expanded into I, Z and ZZ terms.
PauliSum build_schwinger(const SchwingerParams& params);

/// Flux operator on the bond between sites j and j+1 (1-based j in [1, N-1]).
PauliSum flux_operator(int bond, const SchwingerParams& params);

/// |0101...> on an even number of sites.
StateVector bare_vacuum(int n_sites);
std::uint64_t bare_vacuum_index(int n_sites);

/// Fraction of sites whose occupation differs from the bare vacuum pattern.
double particle_density(const StateVector& s, int n_sites);

/// Q = -(1/2) sum_j (Z_j + (-1)^j): fermions minus antifermions relative to the
/// bare vacuum. Equals (number of set bits) - N/2.
PauliSum charge_operator(int n_sites);

/// (1/N) sum_j (-1)^j Z_j; -1 on the bare vacuum, +1 on the inverted pattern.
PauliSum staggered_order_operator(int n_sites);

/// Gauss-law flux on every bond for a classical occupation pattern
/// ('0'/'1' per site, site 1 first). Independent of params.flux.
std::vector<double> reconstruct_efield(std::string_view occupation, const SchwingerParams& params);
std::vector<double> reconstruct_efield(std::span<const int> occupation, const SchwingerParams& params);

/// sum_j (-1)^{j+1}/4 (X_j X_{j+1} + Y_j Y_{j+1}) + sum_j (-1)^j m/2 Z_j
///   + sum_{j<N} g^2/4 Z_j Z_{j+1}.
PauliSum build_thirring(const ThirringParams& params);

/// The same Hamiltonian assembled from fermionic operators and mapped with
/// Jordan-Wigner:
///   sum_j (-1)^{j+1}/2 (c_j^dag c_{j+1} + h.c.) - m sum_j (-1)^j (n_j - 1/2)
///   + g^2 sum_j (n_j - 1/2)(n_{j+1} - 1/2).
PauliSum build_thirring_fermionic(const ThirringParams& params);

/// Deuteron Hamiltonian in a harmonic-oscillator basis of 2 or 3 levels.
PauliSum build_deuteron(const DeuteronSpec& spec);

/// sum_{i<j} J_ij (s+_i s-_j + h.c.) + B sum_j Z_j with J_ij = J0 / |i-j|^alpha.
PauliSum build_resource_xy(const ResourceParams& params);
double resource_coupling(const ResourceParams& params, int i, int j);

/// (delta/2) Z_j on qubit j (0-based).
PauliSum local_z(int qubit, double delta, int n_sites);

}  // namespace lqs
