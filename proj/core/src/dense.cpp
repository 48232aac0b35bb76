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

#include "lqs/dense.hpp"

#include <bit>

#include "lqs/errors.hpp"

namespace lqs {

namespace {

cplx i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void accumulate(DenseMatrix& m, const PauliString& l, cplx c) {
  const cplx factor = c * i_power(l.y_count());
  const auto dim = static_cast<std::uint64_t>(m.rows());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(b & l.z) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ l.x), static_cast<Eigen::Index>(b)) += sign * factor;
  }
}

DenseMatrix zero_matrix(int n) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  return DenseMatrix::Zero(dim, dim);
}

}  // namespace

void check_dense_cap(int n_qubits, int max_qubits, const char* what) {
  if (n_qubits > max_qubits) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n_qubits) +
                        " qubits exceeds the dense cap of " + std::to_string(max_qubits));
  }
}

DenseMatrix to_dense(const PauliSum& h, int max_qubits) {
  check_dense_cap(h.n_qubits(), max_qubits, "to_dense");
  DenseMatrix m = zero_matrix(h.n_qubits());
  m.diagonal().array() += h.constant_offset();
  for (const auto& t : h.terms()) accumulate(m, t.letters(), t.coefficient());
  return m;
}

DenseMatrix to_dense(const PauliOperator& op, int max_qubits) {
  check_dense_cap(op.n_qubits(), max_qubits, "to_dense");
  DenseMatrix m = zero_matrix(op.n_qubits());
  for (const auto& [l, c] : op.entries()) accumulate(m, l, c);
  return m;
}

DenseMatrix to_dense(const PauliTerm& p, int max_qubits) {
  check_dense_cap(p.n_qubits(), max_qubits, "to_dense");
  DenseMatrix m = zero_matrix(p.n_qubits());
  accumulate(m, p.letters(), p.complex_coefficient());
  return m;
}

DenseVector to_eigen(const StateVector& s) {
  const auto a = s.amplitudes();
  return Eigen::Map<const DenseVector>(a.data(), static_cast<Eigen::Index>(a.size()));
}

StateVector from_eigen(int n_qubits, const DenseVector& v) {
  return StateVector(n_qubits, std::vector<cplx>(v.data(), v.data() + v.size()));
}

}  // namespace lqs
