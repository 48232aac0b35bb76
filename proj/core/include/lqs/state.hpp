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

#include <bit>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lqs/pauli.hpp"

namespace lqs {

/// Amplitudes over the 2^n computational basis states.
///
/// Basis index bit j holds qubit j; |0> is the +1 eigenstate of Z.
/// Mutation follows a single-writer contract.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// "0101" -> qubit 0 in |0>, qubit 1 in |1>, ...
  static StateVector from_bitstring(std::string_view bits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();
  /// <this|other>
  cplx inner(const StateVector& other) const;
  double fidelity(const StateVector& other) const;
  /// Euclidean distance ||this - other||.
  double distance(const StateVector& other) const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator*=(cplx factor);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator*(cplx f, StateVector a) { return a *= f; }

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

/// p|s>. The norm scales by |p.coefficient|.
StateVector apply_term(const PauliTerm& p, const StateVector& s);
StateVector apply(const PauliSum& h, const StateVector& s);
StateVector apply(const PauliOperator& op, const StateVector& s);

/// <s|p|s> including the term's coefficient.
cplx expectation(const PauliTerm& p, const StateVector& s);
/// <s|h|s>. Throws InvariantError if the imaginary residue exceeds 1e-10.
double expectation(const PauliSum& h, const StateVector& s);

/// exp(-i theta p)|s> for a unit-coefficient term, computed as
/// cos(theta) s - i sin(theta) p s. Throws ContractError otherwise.
StateVector exp_term_apply(double theta, const PauliTerm& p, const StateVector& s);
void exp_term_apply_inplace(double theta, const PauliTerm& p, StateVector& s);

/// Multiplies amplitude b by exp(-i theta diag[b]).
void apply_diagonal_phase(double theta, std::span<const double> diagonal, StateVector& s);

/// PauliSum pre-grouped for repeated application: all diagonal terms are
/// folded into one vector and off-diagonal strings are bucketed by X mask.
class CompiledPauliSum {
 public:
  explicit CompiledPauliSum(const PauliSum& h);

  int n_qubits() const { return n_qubits_; }
  /// out = h * in (out is overwritten).
  void apply(const StateVector& in, StateVector& out) const;
  StateVector apply(const StateVector& in) const;
  double expectation(const StateVector& s) const;
  std::span<const double> diagonal() const { return diagonal_; }

  /// Calls fn(row, value) for every matrix element <row|h|b> of column b:
  /// the diagonal first, then one entry per distinct X mask.
  template <class Fn>
  void for_each_in_column(std::uint64_t b, Fn&& fn) const {
    fn(b, cplx{diagonal_[b], 0.0});
    for (const auto& g : groups_) {
      cplx f{};
      for (const auto& c : g.components) {
        f += (std::popcount(b & c.z) & 1) ? -c.factor : c.factor;
      }
      fn(b ^ g.x, f);
    }
  }

 private:
  struct Component {
    std::uint64_t z;
    cplx factor;  // coefficient times i^{|x&z|}
  };
  struct MaskGroup {
    std::uint64_t x;
    std::vector<Component> components;
  };
  int n_qubits_;
  std::vector<double> diagonal_;
  std::vector<MaskGroup> groups_;
};

}  // namespace lqs
