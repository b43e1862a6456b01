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

#include <optional>
#include <string>
#include <vector>

#include "causetq/causet.hpp"

namespace causetq {

enum class PauliLetter { X, Z };

struct PauliTerm {
  double coefficient = 0.0;
  // sorted by qubit index; empty support = identity term
  std::vector<std::pair<int, PauliLetter>> support;

  bool is_diagonal() const;  // identity or all-Z
  bool is_single_x() const;
  std::uint64_t z_mask() const;  // valid only for diagonal terms
};

// Weighted sum of Pauli strings. Structurally restricted to all-Z (diagonal)
// strings plus single-qubit X terms; builders enforce the split.
struct PauliHamiltonian {
  int qubits = 0;
  std::vector<PauliTerm> terms;

  // throws std::logic_error when a term is neither diagonal nor a single X
  void check_structure() const;
};

struct PenaltyScale {
  double p = 1.0;
};

// Relative term weights parameterized by (r_TC, r_BD); the three gammas sum
// to one by construction.
struct GammaConfig {
  double r_tc = 0.0;
  double r_bd = 0.0;

  double gamma_tc() const { return r_tc; }
  double gamma_bd() const { return (1.0 - r_tc) * r_bd; }
  double gamma_mix() const { return (1.0 - r_tc) * (1.0 - r_bd); }
};

// Sum of single-qubit X terms with unit coefficients.
PauliHamiltonian build_h_mix(int qubits);

// Diagonal penalty whose value on a basis state is p times the number of
// transitivity-violating triples; the identity part is retained so valid
// causal sets sit at energy exactly zero.
PauliHamiltonian build_h_tc(int n, PenaltyScale p = {});

// Diagonal Hamiltonian whose value on every basis state equals the
// O(epsilon)-truncated 4d action evaluated on the raw configuration.
PauliHamiltonian build_h_bd(int n, double epsilon);

// <m|H|m> for a diagonal Hamiltonian; throws std::invalid_argument when an
// X term is present.
double diagonal_value(const PauliHamiltonian& h, const CausalMatrix& m);

// Mixer-to-problem normalization 1/(2 eps^2); independent of qubit count.
double alpha_bd(int qubits, double epsilon);

// Mixer-to-constraint normalization sqrt(q) * binom(n,3) / 8.
double alpha_tc(int n);

// H = gamma_tc*alpha_tc*H_TC + gamma_bd*alpha_bd*H_BD + gamma_mix*H_mix on
// q = n(n-1)/2 qubits. The alpha overrides replace the normalization factors
// when provided. Terms with equal support are merged.
PauliHamiltonian combine(const GammaConfig& g, int n, double epsilon, PenaltyScale p = {},
                         std::optional<double> alpha_tc_override = std::nullopt,
                         std::optional<double> alpha_bd_override = std::nullopt);

// One line per term: the coefficient followed by letter@qubit pairs.
std::string to_string(const PauliHamiltonian& h);

}  // namespace causetq
