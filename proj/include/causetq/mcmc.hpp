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

#include <functional>

#include "causetq/action.hpp"
#include "causetq/proposals.hpp"

namespace causetq {

// Action used for Metropolis weights and Boltzmann laws. Dimension 4 uses
// the exact smeared action; dimension 2 the first-order general-d action
// with the built-in constants; custom params win when provided.
struct ActionSpec {
  int dimension = 4;
  double epsilon = 0.1;
  std::optional<SmearedActionParams> custom;

  double value(const CausalSet& s) const;
};

struct AcceptanceRule {
  enum class Kind { UniformValidity, Metropolis };

  Kind kind = Kind::UniformValidity;
  double beta = 0.0;  // inverse temperature, Metropolis only
  ActionSpec action;
  // mu(C') / mu(C); a null hook means the uniform measure
  std::function<double(const CausalSet& proposed, const CausalSet& current)> weight_ratio;

  static AcceptanceRule uniform_validity();
  static AcceptanceRule metropolis(double temperature, ActionSpec action = {});
};

// Validity gate plus, for Metropolis, the exp(-beta dS) * mu-ratio > u test.
bool accept(const AcceptanceRule& rule, const CausalSet& current, const CausalMatrix& proposed,
            Rng& rng);

// Probability that a valid target is accepted: 1, or min(1, exp(-beta dS) mu).
double acceptance_probability(const AcceptanceRule& rule, const CausalSet& current,
                              const CausalSet& proposed);

struct ChainOptions {
  long long steps = 100000;
  long long burn_in = -1;  // -1: steps / 10
  long long thin = 1;
};

struct ChainSample {
  long long step = 0;
  CausalSet set;
  double action = 0.0;
  AbundanceVector abundance;
  bool accepted = false;  // whether this step's proposal was accepted
};

struct ChainResult {
  std::vector<ChainSample> samples;
  long long steps = 0;
  long long accepted = 0;

  double acceptance_rate() const { return steps > 0 ? static_cast<double>(accepted) / steps : 0.0; }
};

ChainResult run_chain(const CausalSet& initial, const ProposalStrategy& strategy,
                      const AcceptanceRule& rule, const ChainOptions& options, Rng& rng);

// Normalized histogram over enumerate_causal_sets(n) order. A sample outside
// the enumeration is an internal error (std::logic_error).
std::vector<double> empirical_distribution(const std::vector<ChainSample>& samples, int n,
                                           int max_cardinality = kDefaultMaxCardinality);

// nu(C) proportional to exp(-beta S(C)) over the enumerated sets.
std::vector<double> boltzmann_distribution(int n, double beta, const ActionSpec& action,
                                           int max_cardinality = kDefaultMaxCardinality);

// The stationary law the rule targets: uniform or Boltzmann.
std::vector<double> stationary_distribution(int n, const AcceptanceRule& rule,
                                            int max_cardinality = kDefaultMaxCardinality);

}  // namespace causetq
