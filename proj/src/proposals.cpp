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

#include "causetq/proposals.hpp"

#include <stdexcept>

namespace causetq {

ProposalStrategy ProposalStrategy::relation() { return {StrategyKind::Relation, {}, 0.5}; }

ProposalStrategy ProposalStrategy::link() { return {StrategyKind::Link, {}, 0.5}; }

ProposalStrategy ProposalStrategy::classical_mixed(double relation_weight) {
  return {StrategyKind::ClassicalMixed, {}, relation_weight};
}

ProposalStrategy ProposalStrategy::quantum_weighted() {
  return {StrategyKind::Quantum, {}, 0.5};
}

ProposalStrategy ProposalStrategy::quantum_uniform() {
  ProposalStrategy s{StrategyKind::Quantum, {}, 0.5};
  s.quantum.r_bd_range = {0.0, 0.0};
  return s;
}

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Relation: return "relation";
    case StrategyKind::Link: return "link";
    case StrategyKind::ClassicalMixed: return "classical-mixed";
    case StrategyKind::Quantum: return "quantum";
  }
  return "?";
}

std::vector<QuantumParameterSample> draw_parameter_samples(const QuantumProposalParams& params,
                                                           int count, Rng& rng) {
  if (count < 1) throw std::invalid_argument("draw_parameter_samples: count must be positive");
  std::vector<QuantumParameterSample> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    QuantumParameterSample s;
    s.r_tc = rng.uniform_in(params.r_tc_range.first, params.r_tc_range.second);
    s.r_bd = rng.uniform_in(params.r_bd_range.first, params.r_bd_range.second);
    s.steps = rng.int_in(params.t_min, params.t_max);
    samples.push_back(s);
  }
  return samples;
}

CausalMatrix propose_relation(const CausalSet& s, Rng& rng) {
  CausalMatrix m = s.matrix();
  int bit = static_cast<int>(rng.below(m.qubits()));
  return CausalMatrix(m.cardinality(), m.pattern() ^ (1ULL << bit));
}

namespace {

// Outcome of the link move for a designated pair: the changed configuration,
// or the current one when the pair is neither a removable link nor a safe
// addition.
CausalMatrix link_move_outcome(const CausalSet& s, int i, int j) {
  CausalMatrix m = s.matrix();
  if (m.related(i, j)) {
    if (interval_cardinality(m, i, j) == 0) {
      m.set_relation(i, j, false);
      return m;
    }
    return m;
  }
  m.set_relation(i, j, true);
  if (count_violations(m) == 0) return m;
  return s.matrix();
}

}  // namespace

CausalMatrix propose_link(const CausalSet& s, Rng& rng) {
  int n = s.cardinality();
  int bit = static_cast<int>(rng.below(pair_count(n)));
  auto [i, j] = pair_from_index(bit, n);
  return link_move_outcome(s, i, j);
}

CausalMatrix propose_classical_mixed(const CausalSet& s, Rng& rng, double relation_weight) {
  if (rng.uniform() < relation_weight) return propose_relation(s, rng);
  return propose_link(s, rng);
}

QuantumProposalEngine::QuantumProposalEngine(int n, const QuantumProposalParams& params)
    : n_(n), params_(params) {
  int q = pair_count(n);
  alpha_tc_ = params.alpha_tc_override ? *params.alpha_tc_override : (n >= 3 ? alpha_tc(n) : 0.0);
  alpha_bd_ = params.alpha_bd_override ? *params.alpha_bd_override : alpha_bd(q, params.epsilon);
  diag_tc_ = hamiltonian_diagonal(build_h_tc(n, {params.penalty}));
  diag_bd_ = hamiltonian_diagonal(build_h_bd(n, params.epsilon));
}

TrotterEvolver QuantumProposalEngine::make_evolver(const QuantumParameterSample& sample) const {
  GammaConfig g{sample.r_tc, sample.r_bd};
  double w_tc = g.gamma_tc() * alpha_tc_;
  double w_bd = g.gamma_bd() * alpha_bd_;
  std::vector<double> diag(diag_tc_.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    diag[i] = w_tc * diag_tc_[i] + w_bd * diag_bd_[i];
  }
  int q = pair_count(n_);
  std::vector<std::pair<int, double>> rotations;
  rotations.reserve(q);
  double g_mix = g.gamma_mix();
  for (int k = 0; k < q; ++k) rotations.emplace_back(k, g_mix);
  return TrotterEvolver(q, diag, std::move(rotations));
}

StateVector QuantumProposalEngine::evolved_state(const CausalSet& from,
                                                 const QuantumParameterSample& sample) const {
  if (from.cardinality() != n_) {
    throw std::invalid_argument("QuantumProposalEngine: cardinality mismatch");
  }
  return make_evolver(sample).evolve(basis_state(from.matrix()), sample.steps);
}

std::vector<double> QuantumProposalEngine::distribution(
    const CausalSet& from, const QuantumParameterSample& sample) const {
  return measure_distribution(evolved_state(from, sample));
}

CausalMatrix QuantumProposalEngine::propose(const CausalSet& from,
                                            const QuantumParameterSample& sample, Rng& rng) const {
  return sample_measurement(evolved_state(from, sample), rng);
}

QuantumParameterSample QuantumProposalEngine::draw_sample(Rng& rng) const {
  QuantumParameterSample s;
  s.r_tc = rng.uniform_in(params_.r_tc_range.first, params_.r_tc_range.second);
  s.r_bd = rng.uniform_in(params_.r_bd_range.first, params_.r_bd_range.second);
  s.steps = rng.int_in(params_.t_min, params_.t_max);
  return s;
}

CausalMatrix propose_quantum(const CausalSet& s, const ProposalStrategy& strategy, Rng& rng) {
  QuantumProposalEngine engine(s.cardinality(), strategy.quantum);
  return engine.propose(s, engine.draw_sample(rng), rng);
}

CausalMatrix propose(const CausalSet& s, const ProposalStrategy& strategy, Rng& rng) {
  switch (strategy.kind) {
    case StrategyKind::Relation: return propose_relation(s, rng);
    case StrategyKind::Link: return propose_link(s, rng);
    case StrategyKind::ClassicalMixed:
      return propose_classical_mixed(s, rng, strategy.relation_weight);
    case StrategyKind::Quantum: return propose_quantum(s, strategy, rng);
  }
  throw std::logic_error("propose: unknown strategy kind");
}

std::vector<double> proposal_distribution(const CausalSet& s, const ProposalStrategy& strategy) {
  int n = s.cardinality();
  int q = pair_count(n);
  std::vector<double> dist(std::size_t{1} << q, 0.0);
  switch (strategy.kind) {
    case StrategyKind::Relation: {
      for (int k = 0; k < q; ++k) {
        dist[s.matrix().pattern() ^ (1ULL << k)] += 1.0 / q;
      }
      return dist;
    }
    case StrategyKind::Link: {
      for (int k = 0; k < q; ++k) {
        auto [i, j] = pair_from_index(k, n);
        dist[link_move_outcome(s, i, j).pattern()] += 1.0 / q;
      }
      return dist;
    }
    case StrategyKind::ClassicalMixed: {
      auto rel = proposal_distribution(s, ProposalStrategy::relation());
      auto link = proposal_distribution(s, ProposalStrategy::link());
      double w = strategy.relation_weight;
      for (std::size_t i = 0; i < dist.size(); ++i) dist[i] = w * rel[i] + (1.0 - w) * link[i];
      return dist;
    }
    case StrategyKind::Quantum:
      throw std::invalid_argument(
          "proposal_distribution: quantum strategy needs a parameter sample");
  }
  throw std::logic_error("proposal_distribution: unknown strategy kind");
}

std::vector<double> quantum_proposal_distribution(const CausalSet& s,
                                                  const QuantumProposalParams& params,
                                                  const QuantumParameterSample& sample) {
  QuantumProposalEngine engine(s.cardinality(), params);
  return engine.distribution(s, sample);
}

}  // namespace causetq
