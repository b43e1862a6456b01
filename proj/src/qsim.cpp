// Copyright 2026 The causetq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "causetq/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "causetq/errors.hpp"

namespace causetq {

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

namespace {

void check_qubits(int qubits) {
  if (qubits < 0) throw std::invalid_argument("negative qubit count");
  if (qubits > kMaxSimQubits) {
    throw ResourceLimitError("state-vector simulation capped at " +
                             std::to_string(kMaxSimQubits) + " qubits, requested " +
                             std::to_string(qubits));
  }
}

}  // namespace

StateVector basis_state(const CausalMatrix& m) {
  check_qubits(m.qubits());
  StateVector s;
  s.qubits = m.qubits();
  s.amplitudes.assign(std::size_t{1} << s.qubits, {0.0, 0.0});
  s.amplitudes[m.pattern()] = {1.0, 0.0};
  return s;
}

std::vector<double> hamiltonian_diagonal(const PauliHamiltonian& h) {
  check_qubits(h.qubits);
  std::size_t dim = std::size_t{1} << h.qubits;
  std::vector<double> diag(dim, 0.0);
  for (const auto& term : h.terms) {
    if (!term.is_diagonal()) continue;
    std::uint64_t mask = term.z_mask();
    double c = term.coefficient;
    for (std::size_t i = 0; i < dim; ++i) {
      diag[i] += (std::popcount(i & mask) & 1) ? -c : c;
    }
  }
  return diag;
}

TrotterEvolver::TrotterEvolver(const PauliHamiltonian& h) : qubits_(h.qubits) {
  check_qubits(qubits_);
  h.check_structure();
  std::vector<double> diag = hamiltonian_diagonal(h);
  phase_.resize(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    phase_[i] = std::polar(1.0, -diag[i]);
  }
  for (const auto& term : h.terms) {
    if (term.is_single_x()) rotations_.emplace_back(term.support[0].first, term.coefficient);
  }
  std::sort(rotations_.begin(), rotations_.end());
}

TrotterEvolver::TrotterEvolver(int qubits, const std::vector<double>& diagonal,
                               std::vector<std::pair<int, double>> x_rotations)
    : qubits_(qubits), rotations_(std::move(x_rotations)) {
  check_qubits(qubits_);
  if (diagonal.size() != (std::size_t{1} << qubits_)) {
    throw std::invalid_argument("TrotterEvolver: diagonal has wrong dimension");
  }
  phase_.resize(diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    phase_[i] = std::polar(1.0, -diagonal[i]);
  }
  std::sort(rotations_.begin(), rotations_.end());
}

void TrotterEvolver::apply_step(StateVector& state) const {
  auto& amp = state.amplitudes;
  for (std::size_t i = 0; i < amp.size(); ++i) amp[i] *= phase_[i];
  for (const auto& [qubit, angle] : rotations_) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amp.size(); base += 2 * bit) {
      for (std::size_t low = 0; low < bit; ++low) {
        std::size_t i0 = base + low;
        std::size_t i1 = i0 + bit;
        std::complex<double> a = amp[i0];
        std::complex<double> b = amp[i1];
        amp[i0] = c * a - std::complex<double>(0.0, s) * b;
        amp[i1] = c * b - std::complex<double>(0.0, s) * a;
      }
    }
  }
}

StateVector TrotterEvolver::evolve(const StateVector& state, int steps) const {
  if (state.qubits != qubits_) {
    throw std::invalid_argument("TrotterEvolver: state dimension mismatch");
  }
  if (steps < 0) throw std::invalid_argument("TrotterEvolver: negative step count");
  StateVector out = state;
  for (int t = 0; t < steps; ++t) apply_step(out);
  return out;
}

StateVector evolve(const StateVector& state, const PauliHamiltonian& h, EvolutionParams params) {
  if (h.qubits != state.qubits) {
    throw std::invalid_argument("evolve: Hamiltonian and state dimensions differ");
  }
  return TrotterEvolver(h).evolve(state, params.steps);
}

std::vector<double> measure_distribution(const StateVector& state) {
  std::vector<double> p(state.amplitudes.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amplitudes[i]);
  return p;
}

CausalMatrix sample_measurement(const StateVector& state, Rng& rng) {
  int n = cardinality_for_qubits(state.qubits);
  double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t last = state.amplitudes.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    cumulative += std::norm(state.amplitudes[i]);
    if (u < cumulative) return CausalMatrix(n, i);
  }
  return CausalMatrix(n, last);
}

std::string distribution_csv(const StateVector& state) {
  std::string out = "index,bitstring,probability\n";
  char buf[64];
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    for (int k = 0; k < state.qubits; ++k) out += (i >> k) & 1 ? '1' : '0';
    std::snprintf(buf, sizeof(buf), ",%.17g\n", std::norm(state.amplitudes[i]));
    out += buf;
  }
  return out;
}

int cardinality_for_qubits(int qubits) {
  for (int n = 1; n <= kMaxMatrixCardinality; ++n) {
    if (pair_count(n) == qubits) return n;
  }
  throw std::invalid_argument("cardinality_for_qubits: " + std::to_string(qubits) +
                              " is not a triangular number");
}

}  // namespace causetq
