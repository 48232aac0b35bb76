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

#include "lqs/fermion.hpp"

#include <string>

#include "lqs/errors.hpp"

namespace lqs {

namespace {

void check_mode(int mode, int n_modes) {
  if (n_modes < 1) throw ContractError("mode count must be positive");
  if (mode < 0 || mode >= n_modes) {
    throw ContractError("mode index " + std::to_string(mode) + " out of range [0, " +
                        std::to_string(n_modes) + ")");
  }
}

void check_pair(int i, int j, int n_modes) {
  check_mode(i, n_modes);
  check_mode(j, n_modes);
  if (i == j) throw ContractError("two-mode operator needs distinct modes, got " + std::to_string(i));
}

// Z string on qubits [0, mode) times (X -/+ iY)/2 on `mode`.
PauliOperator ladder(int mode, int n_modes, double y_sign) {
  check_mode(mode, n_modes);
  const std::uint64_t parity = (std::uint64_t{1} << mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << mode;
  PauliOperator op(n_modes);
  op.add(PauliString{bit, parity}, cplx{0.5, 0.0});
  op.add(PauliString{bit, parity | bit}, cplx{0.0, 0.5 * y_sign});
  return op;
}

}  // namespace

PauliOperator jw_creation(int mode, int n_modes) { return ladder(mode, n_modes, -1.0); }

PauliOperator jw_annihilation(int mode, int n_modes) { return ladder(mode, n_modes, +1.0); }

PauliSum jw_number(int mode, int n_modes) {
  check_mode(mode, n_modes);
  PauliSum n(n_modes);
  n.add_constant(0.5);
  n.add(PauliString{0, std::uint64_t{1} << mode}, -0.5);
  return n;
}

PauliSum jw_hopping(int i, int j, double c, int n_modes) {
  check_pair(i, j, n_modes);
  const PauliOperator forward = jw_creation(i, n_modes) * jw_annihilation(j, n_modes);
  return (c * (forward + forward.adjoint())).to_hermitian();
}

PauliSum jw_density_density(int i, int j, double c, int n_modes) {
  check_pair(i, j, n_modes);
  const PauliOperator product =
      PauliOperator(jw_number(i, n_modes)) * PauliOperator(jw_number(j, n_modes));
  return (cplx{c, 0.0} * product).to_hermitian();
}

PauliSum jw_excitation_generator(int i, int j, int n_modes) {
  check_pair(i, j, n_modes);
  const PauliOperator forward = jw_creation(i, n_modes) * jw_annihilation(j, n_modes);
  return (cplx{0.0, 1.0} * (forward - forward.adjoint())).to_hermitian();
}

PauliOperator jw_map(const FermionOp& op, int n_modes) {
  const auto [i, j] = op.sites;
  switch (op.kind) {
    case FermionKind::kCreate:
      return cplx{op.coefficient, 0.0} * jw_creation(i, n_modes);
    case FermionKind::kAnnihilate:
      return cplx{op.coefficient, 0.0} * jw_annihilation(i, n_modes);
    case FermionKind::kNumber:
      return op.coefficient * jw_number(i, n_modes);
    case FermionKind::kHop:
      return jw_hopping(i, j, op.coefficient, n_modes);
    case FermionKind::kDensityDensity:
      return jw_density_density(i, j, op.coefficient, n_modes);
  }
  throw ContractError("unknown fermion operator kind");
}

PauliSum jw_map_hermitian(std::span<const FermionOp> ops, int n_modes) {
  PauliSum out(n_modes);
  for (const auto& op : ops) {
    if (op.kind == FermionKind::kCreate || op.kind == FermionKind::kAnnihilate) {
      throw ContractError("ladder operators are not Hermitian; use jw_map");
    }
    out += jw_map(op, n_modes).to_hermitian();
  }
  return out;
}

}  // namespace lqs
