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

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lqs {

using cplx = std::complex<double>;

/// Largest register a Pauli string can address (one bit per qubit in a word).
inline constexpr int kMaxQubits = 63;

/// Coefficients whose magnitude falls below this after merging are dropped.
inline constexpr double kMergeTolerance = 1e-14;

/// Letters of a Pauli string as X/Z bit masks. Qubit j is bit j.
///
/// The operator represented is the Hermitian string with Y = iXZ on every
/// qubit where both bits are set, i.e. i^{|x&z|} X^x Z^z.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_identity() const { return (x | z) == 0; }
  bool is_diagonal() const { return x == 0; }
  int weight() const;
  int y_count() const;
  bool commutes_with(const PauliString& other) const;
  char letter(int qubit) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ p.z);
  }
};

/// Parses "XIZY" (qubit 0 first). Throws ContractError on other characters.
PauliString parse_letters(std::string_view letters);
std::string format_letters(const PauliString& p, int n_qubits);

/// A single weighted Pauli string.
///
/// The phase of a product is folded into the real coefficient's sign plus an
/// `imaginary` flag: the term stands for coefficient * (imaginary ? i : 1) * P.
/// Terms that are summands of a Hermitian operator always have imaginary == false.
class PauliTerm {
 public:
  PauliTerm(int n_qubits, PauliString letters, double coefficient = 1.0,
            bool imaginary = false);
  explicit PauliTerm(std::string_view letters, double coefficient = 1.0,
                     bool imaginary = false);

  static PauliTerm identity(int n_qubits, double coefficient = 1.0);
  /// One non-identity letter ('X', 'Y' or 'Z') on `qubit`.
  static PauliTerm single(int n_qubits, int qubit, char letter,
                          double coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  const PauliString& letters() const { return letters_; }
  double coefficient() const { return coefficient_; }
  bool imaginary() const { return imaginary_; }
  cplx complex_coefficient() const;
  std::string letter_string() const { return format_letters(letters_, n_qubits_); }

  bool is_identity() const { return letters_.is_identity(); }
  bool is_diagonal() const { return letters_.is_diagonal(); }
  bool commutes_with(const PauliTerm& other) const;

  PauliTerm with_coefficient(double c) const;

 private:
  int n_qubits_;
  PauliString letters_;
  double coefficient_;
  bool imaginary_;
};

/// Product p*q in canonical form. Throws DimensionError on length mismatch.
PauliTerm multiply(const PauliTerm& p, const PauliTerm& q);

/// Hermitian weighted sum of Pauli strings with a separate identity offset.
///
/// Terms keep insertion order; adding a string that is already present merges
/// coefficients, and merged coefficients below kMergeTolerance are removed.
/// Only real coefficients are accepted.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  double constant_offset() const { return offset_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty() && offset_ == 0.0; }

  /// Coefficient of the given letters; the all-identity string returns the offset.
  double coefficient(std::string_view letters) const;
  double coefficient(const PauliString& letters) const;

  void add(const PauliTerm& term);
  void add(std::string_view letters, double coefficient);
  void add(const PauliString& letters, double coefficient);
  void add_constant(double c) { offset_ += c; }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(double factor);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(double f, PauliSum a) { return a *= f; }

  /// Pairwise commuting terms (offset ignored).
  bool all_terms_commute() const;
  bool is_diagonal() const;

 private:
  int n_qubits_;
  double offset_ = 0.0;
  std::vector<PauliTerm> terms_;
  std::unordered_map<PauliString, std::size_t, PauliStringHash> index_;
};

/// General operator with complex coefficients on Hermitian Pauli strings.
///
/// Used for non-Hermitian intermediates such as fermionic ladder operators.
class PauliOperator {
 public:
  using Entry = std::pair<PauliString, cplx>;

  explicit PauliOperator(int n_qubits);
  PauliOperator(const PauliSum& sum);  // NOLINT(google-explicit-constructor)

  int n_qubits() const { return n_qubits_; }
  std::span<const Entry> entries() const { return entries_; }
  cplx coefficient(const PauliString& letters) const;

  void add(const PauliString& letters, cplx coefficient);
  void add(const PauliTerm& term);

  PauliOperator adjoint() const;
  PauliOperator& operator+=(const PauliOperator& other);
  PauliOperator& operator-=(const PauliOperator& other);
  PauliOperator& operator*=(cplx factor);
  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
  friend PauliOperator operator*(cplx f, PauliOperator a) { return a *= f; }
  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

  /// Converts to a PauliSum. Throws ContractError if any coefficient has an
  /// imaginary part above `tolerance` (the operator is not Hermitian).
  PauliSum to_hermitian(double tolerance = 1e-12) const;

 private:
  int n_qubits_;
  std::vector<Entry> entries_;
  std::unordered_map<PauliString, std::size_t, PauliStringHash> index_;
};

/// [a, b] = ab - ba.
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

/// Shifts every letter by `offset` qubits. Throws BoundaryError when a
/// non-identity letter would leave [0, n_qubits).
PauliSum translate(const PauliSum& sum, int offset);

/// One term per line, `<coefficient> <letters>`, offset as the all-I string.
/// Coefficients use shortest round-trip decimal formatting.
std::string serialize(const PauliSum& sum);
/// Inverse of serialize. Blank lines and lines starting with '#' are skipped.
PauliSum parse_pauli_sum(std::string_view text);

}  // namespace lqs
