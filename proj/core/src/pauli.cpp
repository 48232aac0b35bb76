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

#include "lqs/pauli.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <sstream>

#include "lqs/errors.hpp"
#include "lqs/numfmt.hpp"

namespace lqs {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ContractError("qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
}

std::uint64_t register_mask(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1ULL);
}

// Phase exponent k (mod 4) such that P(a) P(b) = i^k P(a xor b) for
// Hermitian strings P = i^{|x&z|} X^x Z^z.
int product_phase(const PauliString& a, const PauliString& b) {
  const PauliString c{a.x ^ b.x, a.z ^ b.z};
  int k = a.y_count() + b.y_count() - c.y_count() + 2 * std::popcount(a.z & b.x);
  return ((k % 4) + 4) % 4;
}

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

int PauliString::weight() const { return std::popcount(x | z); }
int PauliString::y_count() const { return std::popcount(x & z); }

bool PauliString::commutes_with(const PauliString& other) const {
  // Symplectic form: count of positions where the letters anticommute.
  return (std::popcount((x & other.z) ^ (z & other.x)) & 1) == 0;
}

char PauliString::letter(int qubit) const {
  const bool bx = (x >> qubit) & 1ULL;
  const bool bz = (z >> qubit) & 1ULL;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

PauliString parse_letters(std::string_view letters) {
  if (letters.empty() || letters.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw ContractError("Pauli string length must be in [1, 63]");
  }
  PauliString p;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const std::uint64_t bit = 1ULL << j;
    switch (letters[j]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default:
        throw ContractError(std::string("invalid Pauli letter '") + letters[j] + "'");
    }
  }
  return p;
}

std::string format_letters(const PauliString& p, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int j = 0; j < n_qubits; ++j) s[static_cast<std::size_t>(j)] = p.letter(j);
  return s;
}

PauliTerm::PauliTerm(int n_qubits, PauliString letters, double coefficient, bool imaginary)
    : n_qubits_(n_qubits), letters_(letters), coefficient_(coefficient), imaginary_(imaginary) {
  check_qubit_count(n_qubits);
  if (((letters.x | letters.z) & ~register_mask(n_qubits)) != 0) {
    throw DimensionError("Pauli letters address qubits beyond the register");
  }
}

PauliTerm::PauliTerm(std::string_view letters, double coefficient, bool imaginary)
    : PauliTerm(static_cast<int>(letters.size()), parse_letters(letters), coefficient,
                imaginary) {}

PauliTerm PauliTerm::identity(int n_qubits, double coefficient) {
  return PauliTerm(n_qubits, PauliString{}, coefficient);
}

PauliTerm PauliTerm::single(int n_qubits, int qubit, char letter, double coefficient) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw ContractError("qubit index " + std::to_string(qubit) + " out of range");
  }
  PauliString p;
  const std::uint64_t bit = 1ULL << qubit;
  switch (letter) {
    case 'X': p.x = bit; break;
    case 'Y': p.x = bit; p.z = bit; break;
    case 'Z': p.z = bit; break;
    case 'I': break;
    default: throw ContractError(std::string("invalid Pauli letter '") + letter + "'");
  }
  return PauliTerm(n_qubits, p, coefficient);
}

cplx PauliTerm::complex_coefficient() const {
  return imaginary_ ? cplx{0.0, coefficient_} : cplx{coefficient_, 0.0};
}

bool PauliTerm::commutes_with(const PauliTerm& other) const {
  return letters_.commutes_with(other.letters_);
}

PauliTerm PauliTerm::with_coefficient(double c) const {
  return PauliTerm(n_qubits_, letters_, c, imaginary_);
}

PauliTerm multiply(const PauliTerm& p, const PauliTerm& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw DimensionError("multiply: Pauli terms on " + std::to_string(p.n_qubits()) +
                         " and " + std::to_string(q.n_qubits()) + " qubits");
  }
  const PauliString& a = p.letters();
  const PauliString& b = q.letters();
  const int e = product_phase(a, b) + (p.imaginary() ? 1 : 0) + (q.imaginary() ? 1 : 0);
  const int k = e % 4;
  const double sign = (k >= 2) ? -1.0 : 1.0;
  return PauliTerm(p.n_qubits(), PauliString{a.x ^ b.x, a.z ^ b.z},
                   sign * p.coefficient() * q.coefficient(), (k & 1) != 0);
}

// ---------------------------------------------------------------------------

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) { check_qubit_count(n_qubits); }

double PauliSum::coefficient(std::string_view letters) const {
  if (static_cast<int>(letters.size()) != n_qubits_) {
    throw DimensionError("letter string length does not match qubit count");
  }
  return coefficient(parse_letters(letters));
}

double PauliSum::coefficient(const PauliString& letters) const {
  if (letters.is_identity()) return offset_;
  auto it = index_.find(letters);
  return it == index_.end() ? 0.0 : terms_[it->second].coefficient();
}

void PauliSum::add(const PauliTerm& term) {
  if (term.n_qubits() != n_qubits_) {
    throw DimensionError("PauliSum on " + std::to_string(n_qubits_) +
                         " qubits cannot take a term on " + std::to_string(term.n_qubits()));
  }
  if (term.imaginary() && term.coefficient() != 0.0) {
    throw ContractError("PauliSum holds Hermitian operators; imaginary term " +
                        term.letter_string() + " rejected");
  }
  add(term.letters(), term.coefficient());
}

void PauliSum::add(std::string_view letters, double c) {
  if (static_cast<int>(letters.size()) != n_qubits_) {
    throw DimensionError("letter string length does not match qubit count");
  }
  add(parse_letters(letters), c);
}

void PauliSum::add(const PauliString& letters, double c) {
  if (!std::isfinite(c)) throw ContractError("non-finite Pauli coefficient");
  if (((letters.x | letters.z) & ~register_mask(n_qubits_)) != 0) {
    throw DimensionError("Pauli letters address qubits beyond the register");
  }
  if (letters.is_identity()) {
    offset_ += c;
    return;
  }
  auto it = index_.find(letters);
  if (it == index_.end()) {
    if (std::abs(c) < kMergeTolerance) return;
    index_.emplace(letters, terms_.size());
    terms_.emplace_back(n_qubits_, letters, c);
    return;
  }
  const std::size_t pos = it->second;
  const double merged = terms_[pos].coefficient() + c;
  if (std::abs(merged) >= kMergeTolerance) {
    terms_[pos] = terms_[pos].with_coefficient(merged);
    return;
  }
  terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(pos));
  index_.erase(it);
  for (auto& [key, idx] : index_) {
    if (idx > pos) --idx;
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("PauliSum qubit counts differ");
  offset_ += other.offset_;
  for (const auto& t : other.terms_) add(t.letters(), t.coefficient());
  return *this;
}

PauliSum& PauliSum::operator*=(double factor) {
  offset_ *= factor;
  std::vector<PauliTerm> scaled;
  scaled.reserve(terms_.size());
  for (const auto& t : terms_) scaled.push_back(t.with_coefficient(t.coefficient() * factor));
  terms_.clear();
  index_.clear();
  for (const auto& t : scaled) add(t.letters(), t.coefficient());
  return *this;
}

bool PauliSum::all_terms_commute() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = i + 1; j < terms_.size(); ++j) {
      if (!terms_[i].commutes_with(terms_[j])) return false;
    }
  }
  return true;
}

bool PauliSum::is_diagonal() const {
  for (const auto& t : terms_) {
    if (!t.is_diagonal()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

PauliOperator::PauliOperator(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
}

PauliOperator::PauliOperator(const PauliSum& sum) : PauliOperator(sum.n_qubits()) {
  if (sum.constant_offset() != 0.0) add(PauliString{}, sum.constant_offset());
  for (const auto& t : sum.terms()) add(t.letters(), t.coefficient());
}

cplx PauliOperator::coefficient(const PauliString& letters) const {
  auto it = index_.find(letters);
  return it == index_.end() ? cplx{} : entries_[it->second].second;
}

void PauliOperator::add(const PauliString& letters, cplx c) {
  if (((letters.x | letters.z) & ~register_mask(n_qubits_)) != 0) {
    throw DimensionError("Pauli letters address qubits beyond the register");
  }
  auto it = index_.find(letters);
  if (it == index_.end()) {
    if (std::abs(c) < kMergeTolerance) return;
    index_.emplace(letters, entries_.size());
    entries_.emplace_back(letters, c);
    return;
  }
  const std::size_t pos = it->second;
  const cplx merged = entries_[pos].second + c;
  if (std::abs(merged) >= kMergeTolerance) {
    entries_[pos].second = merged;
    return;
  }
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(pos));
  index_.erase(it);
  for (auto& [key, idx] : index_) {
    if (idx > pos) --idx;
  }
}

void PauliOperator::add(const PauliTerm& term) {
  if (term.n_qubits() != n_qubits_) throw DimensionError("PauliOperator qubit counts differ");
  add(term.letters(), term.complex_coefficient());
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator out(n_qubits_);
  for (const auto& [p, c] : entries_) out.add(p, std::conj(c));
  return out;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("PauliOperator qubit counts differ");
  for (const auto& [p, c] : other.entries_) add(p, c);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("PauliOperator qubit counts differ");
  for (const auto& [p, c] : other.entries_) add(p, -c);
  return *this;
}

PauliOperator& PauliOperator::operator*=(cplx factor) {
  PauliOperator out(n_qubits_);
  for (const auto& [p, c] : entries_) out.add(p, c * factor);
  *this = std::move(out);
  return *this;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) throw DimensionError("PauliOperator qubit counts differ");
  PauliOperator out(a.n_qubits_);
  for (const auto& [pa, ca] : a.entries_) {
    for (const auto& [pb, cb] : b.entries_) {
      out.add(PauliString{pa.x ^ pb.x, pa.z ^ pb.z}, ca * cb * i_power(product_phase(pa, pb)));
    }
  }
  return out;
}

PauliSum PauliOperator::to_hermitian(double tolerance) const {
  PauliSum out(n_qubits_);
  for (const auto& [p, c] : entries_) {
    if (std::abs(c.imag()) > tolerance) {
      throw ContractError("operator is not Hermitian: coefficient of " +
                          format_letters(p, n_qubits_) + " has imaginary part " +
                          format_double(c.imag()));
    }
    out.add(p, c.real());
  }
  return out;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  return a * b - b * a;
}

PauliSum translate(const PauliSum& sum, int offset) {
  const int n = sum.n_qubits();
  PauliSum out(n);
  out.add_constant(sum.constant_offset());
  for (const auto& t : sum.terms()) {
    const std::uint64_t support = t.letters().x | t.letters().z;
    const int lo = std::countr_zero(support);
    const int hi = 63 - std::countl_zero(support);
    if (lo + offset < 0 || hi + offset >= n) {
      throw BoundaryError("translating " + t.letter_string() + " by " + std::to_string(offset) +
                          " leaves the open chain of " + std::to_string(n) + " sites");
    }
    PauliString shifted = t.letters();
    if (offset >= 0) {
      shifted.x <<= offset;
      shifted.z <<= offset;
    } else {
      shifted.x >>= -offset;
      shifted.z >>= -offset;
    }
    out.add(shifted, t.coefficient());
  }
  return out;
}

std::string serialize(const PauliSum& sum) {
  std::string out;
  const int n = sum.n_qubits();
  if (sum.constant_offset() != 0.0) {
    out += format_double(sum.constant_offset());
    out += ' ';
    out += std::string(static_cast<std::size_t>(n), 'I');
    out += '\n';
  }
  for (const auto& t : sum.terms()) {
    out += format_double(t.coefficient());
    out += ' ';
    out += t.letter_string();
    out += '\n';
  }
  return out;
}

PauliSum parse_pauli_sum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<PauliSum> sum;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string coeff_text, letters, extra;
    if (!(fields >> coeff_text >> letters) || (fields >> extra)) {
      throw ContractError("line " + std::to_string(line_no) + ": expected '<coefficient> <letters>'");
    }
    const auto coeff = parse_double(coeff_text);
    if (!coeff) {
      throw ContractError("line " + std::to_string(line_no) + ": bad coefficient '" + coeff_text + "'");
    }
    if (!sum) sum.emplace(static_cast<int>(letters.size()));
    sum->add(letters, *coeff);
  }
  if (!sum) throw ContractError("empty Pauli sum text");
  return std::move(*sum);
}

}  // namespace lqs
