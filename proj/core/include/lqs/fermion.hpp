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

#include <array>
#include <span>

#include "lqs/pauli.hpp"

// Jordan-Wigner encoding of fermionic modes on qubits.
//
// Mode j lives on qubit j (0-based) and |1> is the occupied state, so
//   a_j^dag = Z_0 ... Z_{j-1} (X_j - i Y_j)/2,   n_j = (I - Z_j)/2.

namespace lqs {

enum class FermionKind { kCreate, kAnnihilate, kNumber, kHop, kDensityDensity };

struct FermionOp {
  FermionKind kind;
  std::array<int, 2> sites{0, 0};  // second entry used by kHop / kDensityDensity
  double coefficient = 1.0;
};

PauliOperator jw_creation(int mode, int n_modes);
PauliOperator jw_annihilation(int mode, int n_modes);

/// (I - Z_j)/2.
PauliSum jw_number(int mode, int n_modes);

/// c (a_i^dag a_j + a_j^dag a_i). For |i - j| = 1 this is c/2 (X_i X_j + Y_i Y_j).
PauliSum jw_hopping(int i, int j, double c, int n_modes);

/// c n_i n_j.
PauliSum jw_density_density(int i, int j, double c, int n_modes);

/// Hermitian G with exp(theta (a_i^dag a_j - a_j^dag a_i)) = exp(-i theta G),
/// i.e. G = i (a_i^dag a_j - a_j^dag a_i).
PauliSum jw_excitation_generator(int i, int j, int n_modes);

/// Image of one operator; creation/annihilation yield non-Hermitian operators.
PauliOperator jw_map(const FermionOp& op, int n_modes);

/// Sum of Hermitian operators (number, hop, density-density).
PauliSum jw_map_hermitian(std::span<const FermionOp> ops, int n_modes);

}  // namespace lqs
