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

#include "causetq/mcmc.hpp"

namespace causetq {

// Row-major square matrix over the enumerated causal sets. Used both for
// proposal kernels (rows may sum to less than one; the remainder is mass on
// invalid configurations) and for row-stochastic transition matrices.
struct TransitionMatrix {
  std::size_t order = 0;
  std::vector<double> entries;

  static TransitionMatrix zero(std::size_t order);
  double& at(std::size_t a, std::size_t b) { return entries[a * order + b]; }
  double at(std::size_t a, std::size_t b) const { return entries[a * order + b]; }
  double row_sum(std::size_t a) const;
};

struct GapResult {
  double delta = 0.0;  // absolute spectral gap; 0 flags a periodic kernel
  double error = 0.0;  // jackknife standard error; 0 for exact kernels
};

struct ScalingFit {
  double k = 0.0;       // decay exponent, delta ~ exp(-k N)
  double k_error = 0.0;
  std::vector<std::pair<int, double>> points;  // (N, delta) used in the fit
  std::vector<int> excluded;                   // N values dropped (delta <= 0)
};

// Proposal mass between valid sets for a classical strategy; exact.
TransitionMatrix classical_proposal_kernel(const std::vector<CausalSet>& sets,
                                           const ProposalStrategy& strategy);

// Proposal mass between valid sets for one quantum parameter sample; rows
// may be computed in parallel.
TransitionMatrix quantum_proposal_kernel(const std::vector<CausalSet>& sets,
                                         const QuantumProposalParams& params,
                                         const QuantumParameterSample& sample, int workers = 1);

TransitionMatrix average_kernels(const std::vector<TransitionMatrix>& kernels);

// Row-stochastic transition matrix: off-diagonal = proposal mass times
// acceptance probability; invalid and rejected proposals sit on the diagonal.
TransitionMatrix apply_acceptance(const TransitionMatrix& proposal,
                                  const std::vector<CausalSet>& sets, const AcceptanceRule& rule);

// One-call builder. Quantum strategies average over the shared samples.
TransitionMatrix build_transition_matrix(int n, const ProposalStrategy& strategy,
                                         const AcceptanceRule& rule,
                                         const std::vector<QuantumParameterSample>& samples = {},
                                         int max_cardinality = kDefaultMaxCardinality,
                                         int workers = 1);

// delta = 1 - max non-unit |eigenvalue|. Verifies stochasticity and
// reversibility against the supplied stationary law first, then solves the
// symmetrized similarity transform D^{1/2} T D^{-1/2}.
GapResult spectral_gap(const TransitionMatrix& t, const std::vector<double>& stationary);

// Two-sided thermalization-time bounds
// ((1/delta - 1) ln(1/(2 alpha)), (1/delta) ln(1/(alpha min_nu))).
std::pair<double, double> thermalization_bounds(double delta, double alpha_err, double min_nu);

// Gap of the sample-averaged kernel plus the leave-one-out standard error.
GapResult jackknife_gap(const std::vector<TransitionMatrix>& per_sample_kernels,
                        const std::vector<CausalSet>& sets, const AcceptanceRule& rule);

// Least-squares fit of ln(delta) against N; k > 0 means exponential decay.
ScalingFit fit_scaling(const std::vector<std::pair<int, GapResult>>& gaps);

}  // namespace causetq
