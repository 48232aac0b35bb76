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

#include "lqs/state.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "lqs/errors.hpp"

namespace lqs {

namespace {

constexpr int kMaxStateQubits = 30;

void check_same(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": operator on " + std::to_string(a) +
                         " qubits, state on " + std::to_string(b));
  }
}

cplx i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double parity_sign(std::uint64_t b, std::uint64_t z) {
  return (std::popcount(b & z) & 1) ? -1.0 : 1.0;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw ResourceError("state vector qubit count " + std::to_string(n_qubits) +
                        " outside [1, " + std::to_string(kMaxStateQubits) + "]");
  }
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw ResourceError("state vector qubit count out of range");
  }
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                         " is not 2^" + std::to_string(n_qubits));
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw ContractError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_bitstring(std::string_view bits) {
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      index |= 1ULL << j;
    } else if (bits[j] != '0') {
      throw ContractError("bit string may only contain '0' and '1'");
    }
  }
  return basis(static_cast<int>(bits.size()), index);
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw InvariantError("cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

cplx StateVector::inner(const StateVector& other) const {
  check_same(n_qubits_, other.n_qubits_, "inner");
  cplx acc{};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

double StateVector::fidelity(const StateVector& other) const { return std::norm(inner(other)); }

double StateVector::distance(const StateVector& other) const {
  check_same(n_qubits_, other.n_qubits_, "distance");
  double acc = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::norm(amps_[i] - other.amps_[i]);
  return std::sqrt(acc);
}

StateVector& StateVector::operator+=(const StateVector& other) {
  check_same(n_qubits_, other.n_qubits_, "add");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

StateVector& StateVector::operator*=(cplx factor) {
  for (auto& a : amps_) a *= factor;
  return *this;
}

// ---------------------------------------------------------------------------

StateVector apply_term(const PauliTerm& p, const StateVector& s) {
  check_same(p.n_qubits(), s.n_qubits(), "apply_term");
  const auto x = p.letters().x;
  const auto z = p.letters().z;
  const cplx factor = p.complex_coefficient() * i_power(p.letters().y_count());
  std::vector<cplx> out(s.dimension());
  const auto in = s.amplitudes();
  for (std::uint64_t b = 0; b < in.size(); ++b) {
    out[b ^ x] = factor * parity_sign(b, z) * in[b];
  }
  return StateVector(s.n_qubits(), std::move(out));
}

StateVector apply(const PauliSum& h, const StateVector& s) {
  check_same(h.n_qubits(), s.n_qubits(), "apply");
  return CompiledPauliSum(h).apply(s);
}

StateVector apply(const PauliOperator& op, const StateVector& s) {
  check_same(op.n_qubits(), s.n_qubits(), "apply");
  std::vector<cplx> out(s.dimension());
  const auto in = s.amplitudes();
  for (const auto& [letters, c] : op.entries()) {
    const cplx factor = c * i_power(letters.y_count());
    for (std::uint64_t b = 0; b < in.size(); ++b) {
      out[b ^ letters.x] += factor * parity_sign(b, letters.z) * in[b];
    }
  }
  return StateVector(s.n_qubits(), std::move(out));
}

cplx expectation(const PauliTerm& p, const StateVector& s) {
  check_same(p.n_qubits(), s.n_qubits(), "expectation");
  const auto x = p.letters().x;
  const auto z = p.letters().z;
  const auto in = s.amplitudes();
  cplx acc{};
  for (std::uint64_t b = 0; b < in.size(); ++b) {
    acc += std::conj(in[b ^ x]) * parity_sign(b, z) * in[b];
  }
  return acc * p.complex_coefficient() * i_power(p.letters().y_count());
}

double expectation(const PauliSum& h, const StateVector& s) {
  check_same(h.n_qubits(), s.n_qubits(), "expectation");
  cplx acc = h.constant_offset() * s.inner(s);
  for (const auto& t : h.terms()) acc += expectation(t, s);
  if (std::abs(acc.imag()) > 1e-10) {
    throw InvariantError("expectation of Hermitian sum has imaginary residue " +
                         std::to_string(acc.imag()));
  }
  return acc.real();
}

void exp_term_apply_inplace(double theta, const PauliTerm& p, StateVector& s) {
  check_same(p.n_qubits(), s.n_qubits(), "exp_term_apply");
  if (p.coefficient() != 1.0 || p.imaginary()) {
    throw ContractError("exp_term_apply requires a unit-coefficient term, got " +
                        std::to_string(p.coefficient()) + " * " + p.letter_string());
  }
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const auto x = p.letters().x;
  const auto z = p.letters().z;
  const cplx iy = i_power(p.letters().y_count());
  auto amps = s.amplitudes();
  if (x == 0) {
    // Diagonal: eigenvalue +-1 per basis state.
    const cplx plus{c, -sn};
    const cplx minus{c, sn};
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      amps[b] *= (parity_sign(b, z) > 0) ? plus : minus;
    }
    return;
  }
  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  const cplx minus_i_sin{0.0, -sn};
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & pivot) continue;
    const std::uint64_t partner = b ^ x;
    const cplx a0 = amps[b];
    const cplx a1 = amps[partner];
    // (p s)[partner] = phase(b) a0 and (p s)[b] = phase(partner) a1.
    const cplx ph_b = iy * parity_sign(b, z);
    const cplx ph_p = iy * parity_sign(partner, z);
    amps[b] = c * a0 + minus_i_sin * ph_p * a1;
    amps[partner] = c * a1 + minus_i_sin * ph_b * a0;
  }
}

StateVector exp_term_apply(double theta, const PauliTerm& p, const StateVector& s) {
  StateVector out = s;
  exp_term_apply_inplace(theta, p, out);
  return out;
}

void apply_diagonal_phase(double theta, std::span<const double> diagonal, StateVector& s) {
  if (diagonal.size() != s.dimension()) throw DimensionError("diagonal length mismatch");
  auto amps = s.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const double phi = -theta * diagonal[b];
    amps[b] *= cplx{std::cos(phi), std::sin(phi)};
  }
}

// ---------------------------------------------------------------------------

CompiledPauliSum::CompiledPauliSum(const PauliSum& h) : n_qubits_(h.n_qubits()) {
  const std::size_t dim = std::size_t{1} << n_qubits_;
  diagonal_.assign(dim, h.constant_offset());
  std::map<std::uint64_t, std::size_t> group_of;
  for (const auto& t : h.terms()) {
    const auto& l = t.letters();
    if (l.x == 0) {
      for (std::uint64_t b = 0; b < dim; ++b) diagonal_[b] += t.coefficient() * parity_sign(b, l.z);
      continue;
    }
    auto [it, inserted] = group_of.emplace(l.x, groups_.size());
    if (inserted) groups_.push_back(MaskGroup{l.x, {}});
    groups_[it->second].components.push_back(
        Component{l.z, t.coefficient() * i_power(l.y_count())});
  }
}

void CompiledPauliSum::apply(const StateVector& in, StateVector& out) const {
  check_same(n_qubits_, in.n_qubits(), "apply");
  check_same(n_qubits_, out.n_qubits(), "apply");
  const auto src = in.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t b = 0; b < src.size(); ++b) dst[b] = diagonal_[b] * src[b];
  for (const auto& g : groups_) {
    for (std::uint64_t b = 0; b < src.size(); ++b) {
      cplx f{};
      for (const auto& c : g.components) f += c.factor * parity_sign(b, c.z);
      dst[b ^ g.x] += f * src[b];
    }
  }
}

StateVector CompiledPauliSum::apply(const StateVector& in) const {
  StateVector out(in.n_qubits());
  apply(in, out);
  return out;
}

double CompiledPauliSum::expectation(const StateVector& s) const {
  const StateVector hs = apply(s);
  const cplx e = s.inner(hs);
  if (std::abs(e.imag()) > 1e-10) {
    throw InvariantError("expectation of Hermitian sum has imaginary residue");
  }
  return e.real();
}

}  // namespace lqs
