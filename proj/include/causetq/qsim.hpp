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

#pragma once

#include <complex>
#include <vector>

#include "causetq/pauli.hpp"
#include "causetq/rng.hpp"

namespace causetq {

// Dense double-precision amplitudes; 2^21 amplitudes (N = 7) is the budget.
inline constexpr int kMaxSimQubits = 21;

struct StateVector {
  int qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

// Trotter step count; each step evolves for unit time.
struct EvolutionParams {
  int steps = 1;
};

// Basis state at the index whose binary expansion is the bit pattern of m
// (qubit k <-> bit k of the index).
StateVector basis_state(const CausalMatrix& m);

// Dense diagonal <i|H|i> over all 2^q basis states (X terms ignored).
std::vector<double> hamiltonian_diagonal(const PauliHamiltonian& h);

// Precomputed first-order Trotter step for one Hamiltonian. A step applies
// the fused diagonal phase exp(-i D), then exp(-i c_k X_k) for each mixer
// term in ascending qubit order.
class TrotterEvolver {
 public:
  explicit TrotterEvolver(const PauliHamiltonian& h);
  TrotterEvolver(int qubits, const std::vector<double>& diagonal,
                 std::vector<std::pair<int, double>> x_rotations);

  int qubits() const { return qubits_; }
  void apply_step(StateVector& state) const;
  StateVector evolve(const StateVector& state, int steps) const;

 private:
  int qubits_ = 0;
  std::vector<std::complex<double>> phase_;
  std::vector<std::pair<int, double>> rotations_;  // (qubit, angle), ascending
};

StateVector evolve(const StateVector& state, const PauliHamiltonian& h, EvolutionParams params);

// |amplitude|^2 per basis index.
std::vector<double> measure_distribution(const StateVector& state);

// One computational-basis measurement; the outcome bits are returned as a
// raw (possibly non-transitive) configuration.
CausalMatrix sample_measurement(const StateVector& state, Rng& rng);

// Debug dump: "index,bitstring,probability" rows over all 2^q outcomes.
std::string distribution_csv(const StateVector& state);

// n with n(n-1)/2 == qubits; throws std::invalid_argument otherwise.
int cardinality_for_qubits(int qubits);

}  // namespace causetq
