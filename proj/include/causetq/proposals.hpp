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
#include <vector>

#include "causetq/pauli.hpp"
#include "causetq/qsim.hpp"

namespace causetq {

enum class StrategyKind { Relation, Link, ClassicalMixed, Quantum };

// Ranges the quantum proposal draws its evolution parameters from. Defaults
// are the weighted-sampling ranges; uniform sampling pins r_bd to zero.
struct QuantumProposalParams {
  std::pair<double, double> r_tc_range{0.7, 0.9};
  std::pair<double, double> r_bd_range{0.02, 0.05};
  int t_min = 3;
  int t_max = 10;
  double epsilon = 0.1;
  double penalty = 1.0;
  std::optional<double> alpha_tc_override;
  std::optional<double> alpha_bd_override;
  int sample_count = 10;  // shared (gamma, t) draws per experiment
};

struct ProposalStrategy {
  StrategyKind kind = StrategyKind::Relation;
  QuantumProposalParams quantum;
  double relation_weight = 0.5;  // probability of the relation move in the classical mixture

  static ProposalStrategy relation();
  static ProposalStrategy link();
  static ProposalStrategy classical_mixed(double relation_weight = 0.5);
  static ProposalStrategy quantum_weighted();
  static ProposalStrategy quantum_uniform();  // r_bd pinned to {0, 0}
};

const char* to_string(StrategyKind kind);

// One draw of the quantum evolution parameters.
struct QuantumParameterSample {
  double r_tc = 0.0;
  double r_bd = 0.0;
  int steps = 0;
};

// The shared sample list reused for every source configuration of one
// experiment; reuse keeps each sampled proposal kernel exactly symmetric.
std::vector<QuantumParameterSample> draw_parameter_samples(const QuantumProposalParams& params,
                                                           int count, Rng& rng);

// Uniformly flip one of the q bits; validity is judged by the acceptance
// stage.
CausalMatrix propose_relation(const CausalSet& s, Rng& rng);

// Uniformly pick a pair; remove it when it is a link, add it when addition
// keeps the set transitive, otherwise propose the current set.
CausalMatrix propose_link(const CausalSet& s, Rng& rng);

CausalMatrix propose_classical_mixed(const CausalSet& s, Rng& rng, double relation_weight = 0.5);

// Caches the gamma-independent Hamiltonian diagonals for one (n, epsilon,
// penalty), so chains and kernel builders pay the Pauli expansion only once.
class QuantumProposalEngine {
 public:
  QuantumProposalEngine(int n, const QuantumProposalParams& params);

  int cardinality() const { return n_; }
  StateVector evolved_state(const CausalSet& from, const QuantumParameterSample& sample) const;
  std::vector<double> distribution(const CausalSet& from,
                                   const QuantumParameterSample& sample) const;
  CausalMatrix propose(const CausalSet& from, const QuantumParameterSample& sample,
                       Rng& rng) const;
  QuantumParameterSample draw_sample(Rng& rng) const;

 private:
  TrotterEvolver make_evolver(const QuantumParameterSample& sample) const;

  int n_ = 0;
  QuantumProposalParams params_;
  double alpha_tc_ = 0.0;
  double alpha_bd_ = 0.0;
  std::vector<double> diag_tc_;
  std::vector<double> diag_bd_;
};

// Draws fresh (r_TC, r_BD, t), evolves the basis state of s and measures
// once. Builds a transient engine; chains should hold their own.
CausalMatrix propose_quantum(const CausalSet& s, const ProposalStrategy& strategy, Rng& rng);

CausalMatrix propose(const CausalSet& s, const ProposalStrategy& strategy, Rng& rng);

// Exact proposal distribution over all 2^q configurations for a classical
// strategy; throws std::invalid_argument for the quantum kind (which needs a
// parameter sample).
std::vector<double> proposal_distribution(const CausalSet& s, const ProposalStrategy& strategy);

// Quantum proposal distribution for one parameter sample.
std::vector<double> quantum_proposal_distribution(const CausalSet& s,
                                                  const QuantumProposalParams& params,
                                                  const QuantumParameterSample& sample);

}  // namespace causetq
