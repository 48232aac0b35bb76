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

#include <Eigen/Dense>

#include "lqs/pauli.hpp"
#include "lqs/state.hpp"

namespace lqs {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Default qubit cap for dense 2^n x 2^n matrices (128 MiB at 14 qubits).
inline constexpr int kDefaultDenseQubitCap = 14;

/// Throws ResourceError when n_qubits exceeds max_qubits.
void check_dense_cap(int n_qubits, int max_qubits, const char* what);

DenseMatrix to_dense(const PauliSum& h, int max_qubits = kDefaultDenseQubitCap);
DenseMatrix to_dense(const PauliOperator& op, int max_qubits = kDefaultDenseQubitCap);
DenseMatrix to_dense(const PauliTerm& p, int max_qubits = kDefaultDenseQubitCap);

DenseVector to_eigen(const StateVector& s);
StateVector from_eigen(int n_qubits, const DenseVector& v);

}  // namespace lqs
