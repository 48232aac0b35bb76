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

#include "lqs/thermal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <string>

#include "lqs/errors.hpp"
#include "lqs/evolution.hpp"
#include "lqs/parallel.hpp"
#include "lqs/spectral.hpp"
#include "lqs/state.hpp"

namespace lqs {

namespace {

constexpr std::array<char, 8> kGibbsMagic{'L', 'Q', 'S', 'G', 'I', 'B', 'B', 'S'};

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), 8);
}

std::uint64_t read_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[static_cast<std::size_t>(i)];
  return v;
}

void write_f64(std::ostream& out, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, sizeof bits);
  write_u64(out, bits);
}

double read_f64(std::istream& in) {
  const std::uint64_t bits = read_u64(in);
  double d;
  std::memcpy(&d, &bits, sizeof d);
  return d;
}

}  // namespace

ThermalState bloch_propagate(const PauliSum& h0, double beta, int steps, int max_qubits) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ContractError("beta must be finite and >= 0");
  if (steps < 1) throw ContractError("Bloch propagation needs at least one step");
  const int n = h0.n_qubits();
  check_dense_cap(n, max_qubits, "bloch_propagate");
  const auto spectrum = full_spectrum(h0, max_qubits);
  const double half_step = beta / steps / 2.0;
  Eigen::VectorXd damp(spectrum.energies.size());
  for (Eigen::Index k = 0; k < damp.size(); ++k) damp(k) = std::exp(-half_step * spectrum.energies(k));
  const DenseMatrix e = spectrum.vectors * damp.asDiagonal() * spectrum.vectors.adjoint();

  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseMatrix rho = DenseMatrix::Identity(dim, dim);
  if (beta > 0.0) {
    for (int s = 0; s < steps; ++s) rho = e * rho * e;
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();

  ThermalState ts;
  ts.rho = std::move(rho);
  ts.beta = beta;
  ts.trace = ts.rho.trace().real();
  ts.h0 = h0;
  return ts;
}

PureStateEnsemble decompose(const ThermalState& ts, double threshold) {
  if (!(threshold >= 0.0)) throw ContractError("threshold must be >= 0");
  PureStateEnsemble e;
  e.n_qubits = ts.n_qubits();
  const auto dim = ts.rho.rows();
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const cplx v = ts.rho(a, b);
      if (std::abs(v) > threshold) {
        e.entries.push_back({v, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)});
        if (a == b) e.trace_estimate += v.real();
      }
    }
  }
  return e;
}

DenseMatrix reconstruct(const PureStateEnsemble& e) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << e.n_qubits);
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& p : e.entries) {
    m(static_cast<Eigen::Index>(p.ket), static_cast<Eigen::Index>(p.bra)) += p.weight;
  }
  return m;
}

std::vector<double> ensemble_observable(const PureStateEnsemble& e, const PauliSum& h1,
                                        const PauliSum& o, std::span<const double> times,
                                        const EnsembleOptions& options) {
  const int n = e.n_qubits;
  if (h1.n_qubits() != n || o.n_qubits() != n) throw DimensionError("ensemble operator size mismatch");
  if (e.entries.empty() || e.trace_estimate == 0.0) {
    throw ContractError("observable undefined: ensemble has zero trace estimate");
  }

  std::vector<EnsembleEntry> entries = e.entries;
  std::sort(entries.begin(), entries.end(), [](const EnsembleEntry& x, const EnsembleEntry& y) {
    return x.ket != y.ket ? x.ket < y.ket : x.bra < y.bra;
  });

  std::map<std::uint64_t, std::size_t> slot;
  for (const auto& p : entries) {
    slot.emplace(p.ket, 0);
    slot.emplace(p.bra, 0);
  }
  std::vector<std::uint64_t> basis;
  for (auto& [index, s] : slot) {
    s = basis.size();
    basis.push_back(index);
  }

  std::unique_ptr<ExactPropagator> exact;
  const bool use_trotter = n > options.max_qubits;
  if (!use_trotter) exact = std::make_unique<ExactPropagator>(h1, options.max_qubits);
  const CompiledPauliSum observable(o);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cplx i_unit{0.0, 1.0};

  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    std::vector<StateVector> evolved(basis.size(), StateVector(n));
    parallel_for(basis.size(), [&](std::size_t k) {
      StateVector s = StateVector::basis(n, basis[k]);
      if (t != 0.0) {
        if (use_trotter) {
          s = trotter_evolve(EvolutionPlan(h1, t, options.trotter_steps), s);
        } else {
          exact->evolve_inplace(t, s);
        }
      }
      evolved[k] = std::move(s);
    }, options.threads);

    std::vector<cplx> contributions(entries.size());
    parallel_for(entries.size(), [&](std::size_t p) {
      const auto& entry = entries[p];
      const StateVector& a = evolved[slot.at(entry.ket)];
      if (entry.ket == entry.bra) {
        contributions[p] = entry.weight * observable.expectation(a);
        return;
      }
      const StateVector& b = evolved[slot.at(entry.bra)];
      auto superposed = [&](cplx phase) {
        StateVector s = a;
        s += phase * b;
        s *= cplx{inv_sqrt2, 0.0};
        return observable.expectation(s);
      };
      // <a|O(t)|b> from the four superposition expectations.
      const double re = 0.5 * (superposed(1.0) - superposed(-1.0));
      const double im = -0.5 * (superposed(i_unit) - superposed(-i_unit));
      contributions[p] = entry.weight * std::conj(cplx{re, im});  // chi <b|O(t)|a>
    }, options.threads);

    cplx total{0.0, 0.0};
    double scale = 0.0;
    for (const auto& c : contributions) {
      total += c;
      scale += std::abs(c);
    }
    if (std::abs(total.imag()) > 1e-10 * std::max(1.0, scale)) {
      throw InvariantError("ensemble observable has an imaginary part " + std::to_string(total.imag()));
    }
    out.push_back(total.real() / e.trace_estimate);
  }
  return out;
}

double ensemble_observable(const PureStateEnsemble& e, const PauliSum& h1, const PauliSum& o,
                           double t, const EnsembleOptions& options) {
  const double times[] = {t};
  return ensemble_observable(e, h1, o, times, options).front();
}

void write_gibbs(const std::filesystem::path& path, const ThermalState& ts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot open " + path.string() + " for writing");
  out.write(kGibbsMagic.data(), kGibbsMagic.size());
  write_u64(out, static_cast<std::uint64_t>(ts.n_qubits()));
  for (Eigen::Index r = 0; r < ts.rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < ts.rho.cols(); ++c) {
      write_f64(out, ts.rho(r, c).real());
      write_f64(out, ts.rho(r, c).imag());
    }
  }
  if (!out) throw ResourceError("failed writing " + path.string());
}

DenseMatrix read_gibbs(const std::filesystem::path& path, int* n_qubits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kGibbsMagic) throw ContractError(path.string() + " is not a Gibbs dump");
  const std::uint64_t n = read_u64(in);
  if (n < 1 || n > 30) throw ContractError("Gibbs dump has an invalid qubit count");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  DenseMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = read_f64(in);
      const double im = read_f64(in);
      m(r, c) = cplx{re, im};
    }
  }
  if (!in) throw ContractError(path.string() + " is truncated");
  if (n_qubits != nullptr) *n_qubits = static_cast<int>(n);
  return m;
}

}  // namespace lqs
