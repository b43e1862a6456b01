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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "causetq/mcmc.hpp"
#include "oracles.hpp"

using namespace causetq;

TEST_CASE("accept rejects invalid proposals outright") {
  AcceptanceRule uniform = AcceptanceRule::uniform_validity();
  AcceptanceRule metro = AcceptanceRule::metropolis(0.004);
  CausalSet chain3(CausalMatrix(3, 0b111));
  CausalMatrix invalid(3, 0b101);
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK_FALSE(accept(uniform, chain3, invalid, rng));
    CHECK_FALSE(accept(metro, chain3, invalid, rng));
  }
}

TEST_CASE("downhill moves are always accepted") {
  AcceptanceRule metro = AcceptanceRule::metropolis(0.004);
  // chain -> K22-like is downhill at N = 4; use a guaranteed dS <= 0 pair:
  // antichain (no links) -> single relation (one link lowers the action)
  CausalSet antichain(CausalMatrix(4, 0));
  CausalMatrix one_relation(4, 1);
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(accept(metro, antichain, one_relation, rng));
  }
  CHECK(acceptance_probability(metro, antichain, CausalSet(one_relation)) == 1.0);
}

TEST_CASE("metropolis acceptance probability") {
  ActionSpec action;
  AcceptanceRule rule = AcceptanceRule::metropolis(0.004, action);
  // adding a relation lowers the action, so the uphill direction is
  // single-relation -> antichain
  CausalSet antichain(CausalMatrix(3, 0));
  CausalSet related(CausalMatrix(3, 1));
  double ds = action.value(antichain) - action.value(related);
  CHECK(ds > 0.0);
  CHECK(acceptance_probability(rule, related, antichain) ==
        doctest::Approx(std::exp(-250.0 * ds)));
  // beta = 250, dS = 0.01: acceptance probability exp(-2.5) ~ 0.082
  CHECK(std::exp(-250.0 * 0.01) == doctest::Approx(0.0821).epsilon(1e-3));
}

TEST_CASE("weight hook multiplies the ratio") {
  AcceptanceRule rule = AcceptanceRule::metropolis(0.004);
  rule.weight_ratio = [](const CausalSet&, const CausalSet&) { return 0.0; };
  CausalSet a(CausalMatrix(3, 0));
  CausalMatrix b(3, 1);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) CHECK_FALSE(accept(rule, a, b, rng));
  CHECK(acceptance_probability(rule, a, CausalSet(b)) == 0.0);
}

TEST_CASE("a self-proposing strategy freezes the chain") {
  ProposalStrategy strategy = ProposalStrategy::quantum_weighted();
  strategy.quantum.t_min = 0;
  strategy.quantum.t_max = 0;
  CausalSet initial(CausalMatrix(3, 0b111));
  Rng rng(4);
  ChainResult result =
      run_chain(initial, strategy, AcceptanceRule::uniform_validity(), {2000, 100, 1}, rng);
  for (const auto& sample : result.samples) CHECK(sample.set == initial);
  CHECK(result.accepted == result.steps);  // self-proposals are valid moves
}

TEST_CASE("uniform-rule chain reaches the uniform law at N = 3") {
  auto sets = enumerate_causal_sets(3);
  Rng rng(12345);
  ChainResult result = run_chain(CausalSet(CausalMatrix(3, 0)), ProposalStrategy::relation(),
                                 AcceptanceRule::uniform_validity(), {100000, -1, 1}, rng);
  auto empirical = empirical_distribution(result.samples, 3);
  std::vector<double> uniform(sets.size(), 1.0 / sets.size());
  CHECK(oracles::total_variation(empirical, uniform) <= 0.05);
}

TEST_CASE("metropolis chain reaches the Boltzmann law at N = 3") {
  const double temperature = 0.05;
  AcceptanceRule rule = AcceptanceRule::metropolis(temperature);
  Rng rng(777);
  ChainResult result = run_chain(CausalSet(CausalMatrix(3, 0)),
                                 ProposalStrategy::classical_mixed(), rule, {50000, -1, 1}, rng);
  auto empirical = empirical_distribution(result.samples, 3);
  auto nu = boltzmann_distribution(3, 1.0 / temperature, rule.action);
  CHECK(oracles::total_variation(empirical, nu) <= 0.05);
}

TEST_CASE("chains only ever occupy valid configurations") {
  Rng rng(9);
  ChainResult result = run_chain(CausalSet(CausalMatrix(4, 0)), ProposalStrategy::relation(),
                                 AcceptanceRule::uniform_validity(), {2000, 0, 1}, rng);
  for (const auto& sample : result.samples) {
    CHECK(count_violations(sample.set.matrix()) == 0);
  }
}

TEST_CASE("identical seeds give identical traces") {
  Rng a(555), b(555);
  ChainOptions options{5000, 500, 3};
  AcceptanceRule rule = AcceptanceRule::metropolis(0.01);
  ChainResult ra =
      run_chain(CausalSet(CausalMatrix(4, 0)), ProposalStrategy::classical_mixed(), rule, options, a);
  ChainResult rb =
      run_chain(CausalSet(CausalMatrix(4, 0)), ProposalStrategy::classical_mixed(), rule, options, b);
  REQUIRE(ra.samples.size() == rb.samples.size());
  for (std::size_t i = 0; i < ra.samples.size(); ++i) {
    CHECK(ra.samples[i].set == rb.samples[i].set);
    CHECK(ra.samples[i].accepted == rb.samples[i].accepted);
  }
  CHECK(ra.accepted == rb.accepted);
}

TEST_CASE("empirical_distribution basics") {
  CausalSet chain3(CausalMatrix(3, 0b111));
  std::vector<ChainSample> repeated(50, ChainSample{0, chain3, 0.0, {}, true});
  auto dist = empirical_distribution(repeated, 3);
  double total = 0.0;
  for (double p : dist) total += p;
  CHECK(total == doctest::Approx(1.0));
  auto sets = enumerate_causal_sets(3);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    CHECK(dist[i] == doctest::Approx(sets[i] == chain3 ? 1.0 : 0.0));
  }

  // one sample per enumerated set gives the uniform law
  std::vector<ChainSample> one_each;
  for (const auto& s : sets) one_each.push_back({0, s, 0.0, {}, true});
  auto uniform = empirical_distribution(one_each, 3);
  for (double p : uniform) CHECK(p == doctest::Approx(1.0 / sets.size()));
}

TEST_CASE("boltzmann_distribution") {
  auto sets = enumerate_causal_sets(3);
  ActionSpec action;
  auto flat = boltzmann_distribution(3, 0.0, action);
  for (double p : flat) CHECK(p == doctest::Approx(1.0 / sets.size()));

  // direct normalization oracle (no max shift; the spread is small here)
  const double beta = 250.0;
  double z = 0.0;
  std::vector<double> expected(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    expected[i] = std::exp(-beta * bd_action_4d(sets[i], 0.1));
    z += expected[i];
  }
  for (auto& value : expected) value /= z;
  auto nu = boltzmann_distribution(3, beta, action);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    CHECK(nu[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }

  // large beta concentrates on the minimizers
  auto cold = boltzmann_distribution(3, 1e5, action);
  double top = *std::max_element(cold.begin(), cold.end());
  CHECK(top > 0.33);  // three degenerate minimizers at N = 3
  std::size_t minimizer = 0;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (bd_action_4d(sets[i], 0.1) < bd_action_4d(sets[minimizer], 0.1)) minimizer = i;
  }
  CHECK(cold[minimizer] == doctest::Approx(top).epsilon(1e-6));
}

TEST_CASE("stationary_distribution dispatches on the rule") {
  auto uniform = stationary_distribution(3, AcceptanceRule::uniform_validity());
  for (double p : uniform) CHECK(p == doctest::Approx(1.0 / 7.0));
  auto boltzmann = stationary_distribution(3, AcceptanceRule::metropolis(0.004));
  CHECK(boltzmann != uniform);
}
