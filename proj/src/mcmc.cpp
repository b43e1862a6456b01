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

#include "causetq/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "causetq/errors.hpp"

namespace causetq {

double ActionSpec::value(const CausalSet& s) const {
  if (custom) return bd_action_d(s, *custom);
  if (dimension == 4) return bd_action_4d(s, epsilon);
  if (dimension == 2) return bd_action_d(s, SmearedActionParams::dim2(epsilon));
  throw ConfigError("ActionSpec: no built-in constants for dimension " +
                    std::to_string(dimension));
}

AcceptanceRule AcceptanceRule::uniform_validity() { return {}; }

AcceptanceRule AcceptanceRule::metropolis(double temperature, ActionSpec action) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("AcceptanceRule::metropolis: temperature must be positive");
  }
  AcceptanceRule rule;
  rule.kind = Kind::Metropolis;
  rule.beta = 1.0 / temperature;
  rule.action = action;
  return rule;
}

bool accept(const AcceptanceRule& rule, const CausalSet& current, const CausalMatrix& proposed,
            Rng& rng) {
  if (count_violations(proposed) != 0) return false;
  if (rule.kind == AcceptanceRule::Kind::UniformValidity) return true;
  CausalSet target(proposed);
  double delta = rule.action.value(target) - rule.action.value(current);
  double ratio = std::exp(-rule.beta * delta);
  if (rule.weight_ratio) ratio *= rule.weight_ratio(target, current);
  return ratio > rng.uniform();
}

double acceptance_probability(const AcceptanceRule& rule, const CausalSet& current,
                              const CausalSet& proposed) {
  if (rule.kind == AcceptanceRule::Kind::UniformValidity) return 1.0;
  double delta = rule.action.value(proposed) - rule.action.value(current);
  double ratio = std::exp(-rule.beta * delta);
  if (rule.weight_ratio) ratio *= rule.weight_ratio(proposed, current);
  return std::min(1.0, ratio);
}

ChainResult run_chain(const CausalSet& initial, const ProposalStrategy& strategy,
                      const AcceptanceRule& rule, const ChainOptions& options, Rng& rng) {
  if (options.steps < 1) throw std::invalid_argument("run_chain: steps must be positive");
  long long burn_in = options.burn_in >= 0 ? options.burn_in : options.steps / 10;
  if (options.steps <= burn_in) {
    throw std::invalid_argument("run_chain: steps must exceed burn_in");
  }
  long long thin = std::max<long long>(1, options.thin);

  // quantum chains keep one engine so the Pauli expansion happens once
  std::unique_ptr<QuantumProposalEngine> engine;
  if (strategy.kind == StrategyKind::Quantum) {
    engine = std::make_unique<QuantumProposalEngine>(initial.cardinality(), strategy.quantum);
  }

  ChainResult result;
  result.steps = options.steps;
  CausalSet current = initial;
  for (long long step = 1; step <= options.steps; ++step) {
    CausalMatrix raw = engine ? engine->propose(current, engine->draw_sample(rng), rng)
                              : propose(current, strategy, rng);
    bool moved = accept(rule, current, raw, rng);
    if (moved) {
      current = CausalSet(raw);
      ++result.accepted;
    }
    if (step > burn_in && (step - burn_in) % thin == 0) {
      ChainSample sample{step, current, rule.action.value(current), abundances(current), moved};
      result.samples.push_back(std::move(sample));
    }
  }
  return result;
}

namespace {

std::unordered_map<std::uint64_t, std::size_t> enumeration_index(const std::vector<CausalSet>& sets) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i].matrix().pattern()] = i;
  return index;
}

}  // namespace

std::vector<double> empirical_distribution(const std::vector<ChainSample>& samples, int n,
                                           int max_cardinality) {
  auto sets = enumerate_causal_sets(n, max_cardinality);
  auto index = enumeration_index(sets);
  std::vector<double> histogram(sets.size(), 0.0);
  for (const auto& sample : samples) {
    if (sample.set.cardinality() != n) {
      throw std::logic_error("empirical_distribution: sample cardinality mismatch");
    }
    auto it = index.find(sample.set.matrix().pattern());
    if (it == index.end()) {
      throw std::logic_error("empirical_distribution: sample not in enumeration");
    }
    histogram[it->second] += 1.0;
  }
  if (!samples.empty()) {
    for (auto& value : histogram) value /= static_cast<double>(samples.size());
  }
  return histogram;
}

std::vector<double> boltzmann_distribution(int n, double beta, const ActionSpec& action,
                                           int max_cardinality) {
  if (beta < 0.0) throw std::invalid_argument("boltzmann_distribution: beta must be >= 0");
  auto sets = enumerate_causal_sets(n, max_cardinality);
  std::vector<double> log_weight(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) log_weight[i] = -beta * action.value(sets[i]);
  double shift = *std::max_element(log_weight.begin(), log_weight.end());
  std::vector<double> nu(sets.size());
  double total = 0.0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    nu[i] = std::exp(log_weight[i] - shift);
    total += nu[i];
  }
  for (auto& value : nu) value /= total;
  return nu;
}

std::vector<double> stationary_distribution(int n, const AcceptanceRule& rule,
                                            int max_cardinality) {
  if (rule.kind == AcceptanceRule::Kind::Metropolis) {
    return boltzmann_distribution(n, rule.beta, rule.action, max_cardinality);
  }
  auto sets = enumerate_causal_sets(n, max_cardinality);
  return std::vector<double>(sets.size(), 1.0 / static_cast<double>(sets.size()));
}

}  // namespace causetq
