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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Soft reference targets print as WARN lines and do not
// affect the exit status.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "causetq/exactbd.hpp"
#include "causetq/spectral.hpp"
#include "oracles.hpp"

using namespace causetq;

namespace {

constexpr std::uint64_t kRootSeed = 20260810;

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;
  std::vector<std::string> warnings;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      details.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
  void warn_if(bool misses, const std::string& what) {
    if (misses) warnings.push_back(what);
  }
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// shared sample list per cardinality, fixed seeds
std::vector<QuantumParameterSample> shared_samples(const QuantumProposalParams& params, int n,
                                                   std::uint64_t stream) {
  Rng rng = Rng(kRootSeed).child(stream, n);
  return draw_parameter_samples(params, params.sample_count, rng);
}

std::vector<TransitionMatrix> quantum_kernels(const std::vector<CausalSet>& sets,
                                              const QuantumProposalParams& params,
                                              const std::vector<QuantumParameterSample>& samples) {
  std::vector<TransitionMatrix> kernels;
  kernels.reserve(samples.size());
  for (const auto& sample : samples) {
    kernels.push_back(quantum_proposal_kernel(sets, params, sample));
  }
  return kernels;
}

// ---------------------------------------------------------------------------

void criterion_1_enumeration(Outcome& out) {
  const std::vector<std::size_t> expected = {2, 7, 40, 357};
  for (int n = 2; n <= 5; ++n) {
    auto sets = enumerate_causal_sets(n);
    auto oracle = oracles::brute_force_patterns(n);
    out.require(sets.size() == expected[n - 2],
                "count at N=" + std::to_string(n) + " is " + std::to_string(sets.size()));
    out.require(sets.size() == oracle.size(), "oracle size mismatch at N=" + std::to_string(n));
    for (std::size_t i = 0; i < std::min(sets.size(), oracle.size()); ++i) {
      if (sets[i].matrix().pattern() != oracle[i]) {
        out.require(false, "pattern mismatch at N=" + std::to_string(n));
        break;
      }
    }
  }
  out.note("counts 2, 7, 40, 357 match brute-force filtering");
}

void criterion_2_diagonal_oracles(Outcome& out) {
  double worst_tc = 0.0, worst_bd = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const double penalty = 1.75;
    PauliHamiltonian h_tc = build_h_tc(n, {penalty});
    PauliHamiltonian h_bd = build_h_bd(n, 0.1);
    for (std::uint64_t bits = 0; bits < (1ULL << pair_count(n)); ++bits) {
      CausalMatrix m(n, bits);
      double tc_error = std::abs(diagonal_value(h_tc, m) -
                                 penalty * oracles::violation_scan(bits, n));
      worst_tc = std::max(worst_tc, tc_error);
      // truncated-action pair sum on the raw configuration
      double truncated = 0.0;
      {
        double sum = 0.0;
        for (int k = 1; k <= n; ++k) {
          for (int mm = k + 1; mm <= n; ++mm) {
            if (m.related(k, mm)) sum += 1.0 - 10.0 * 0.1 * interval_cardinality(m, k, mm);
          }
        }
        truncated = 4.0 / std::sqrt(6.0) * std::sqrt(0.1) * (n - 0.1 * sum);
      }
      worst_bd = std::max(worst_bd, std::abs(diagonal_value(h_bd, m) - truncated));
      if (count_violations(m) == 0) {
        worst_bd = std::max(worst_bd, std::abs(diagonal_value(h_bd, m) -
                                               bd_truncated(CausalSet(m), 0.1, 4)));
      }
    }
  }
  out.require(worst_tc <= 1e-12, "H_TC diagonal error " + fmt(worst_tc));
  out.require(worst_bd <= 1e-12, "H_BD diagonal error " + fmt(worst_bd));
  out.note("max |H_TC - P r| = " + fmt(worst_tc) + ", max |H_BD - truncated| = " + fmt(worst_bd));
}

void criterion_3_approximation_order(Outcome& out) {
  const std::vector<double> epsilons = {0.1, 0.05, 0.025};
  double worst_spread = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& s : enumerate_causal_sets(n)) {
      double lo = 1e300, hi = 0.0;
      for (double eps : epsilons) {
        double ratio = std::abs(bd_truncated(s, eps, 4) - bd_action_4d(s, eps)) /
                       std::pow(eps, 3.5);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      if (hi < 1e-9) continue;  // sets with no intervals of size >= 2 are exact
      worst_spread = std::max(worst_spread, hi / lo);
    }
  }
  out.require(worst_spread < 4.0, "ratio spread " + fmt(worst_spread));
  out.note("worst ratio spread across epsilon = " + fmt(worst_spread) + "x (< 4x)");
}

void criterion_4_unitarity_symmetry(Outcome& out) {
  // norm drift
  double worst_drift = 0.0;
  for (double r_tc : {0.7, 0.9}) {
    PauliHamiltonian h = combine({r_tc, 0.04}, 4, 0.1);
    StateVector psi = basis_state(CausalMatrix(4, 0b010110));
    const int steps = 200;
    StateVector evolved = evolve(psi, h, {steps});
    worst_drift = std::max(worst_drift, std::abs(evolved.norm() - 1.0) / steps);
  }
  out.require(worst_drift <= 1e-12, "norm drift per step " + fmt(worst_drift));

  // symmetry of the sample-averaged kernel
  double worst_asym = 0.0;
  for (int n = 3; n <= 4; ++n) {
    auto sets = enumerate_causal_sets(n);
    QuantumProposalParams params;  // weighted defaults
    auto samples = shared_samples(params, n, 4);
    TransitionMatrix mean = average_kernels(quantum_kernels(sets, params, samples));
    for (std::size_t a = 0; a < mean.order; ++a) {
      for (std::size_t b = 0; b < mean.order; ++b) {
        worst_asym = std::max(worst_asym, std::abs(mean.at(a, b) - mean.at(b, a)));
      }
    }
  }
  out.require(worst_asym <= 1e-10, "kernel asymmetry " + fmt(worst_asym));
  out.note("norm drift " + fmt(worst_drift) + "/step, kernel asymmetry " + fmt(worst_asym));
}

void criterion_5_stationary_laws(Outcome& out) {
  const int n = 4;
  const long long steps = 100000;
  ProposalStrategy classical = ProposalStrategy::classical_mixed();
  ProposalStrategy quantum_uniform = ProposalStrategy::quantum_uniform();
  ProposalStrategy quantum_weighted = ProposalStrategy::quantum_weighted();
  AcceptanceRule uniform = AcceptanceRule::uniform_validity();
  AcceptanceRule metro = AcceptanceRule::metropolis(0.004);

  struct Case {
    const char* name;
    ProposalStrategy strategy;
    AcceptanceRule rule;
    std::uint64_t stream;
  };
  const std::vector<Case> cases = {
      {"uniform/classical-mixed", classical, uniform, 50},
      {"uniform/quantum", quantum_uniform, uniform, 51},
      {"metropolis/classical-mixed", classical, metro, 52},
      {"metropolis/quantum", quantum_weighted, metro, 53},
  };
  for (const auto& test_case : cases) {
    Rng rng = Rng(kRootSeed).child(test_case.stream);
    ChainResult result = run_chain(CausalSet(CausalMatrix(n, 0)), test_case.strategy,
                                   test_case.rule, {steps, -1, 1}, rng);
    auto empirical = empirical_distribution(result.samples, n);
    auto target = stationary_distribution(n, test_case.rule);
    double tv = oracles::total_variation(empirical, target);
    out.require(tv <= 0.05, std::string(test_case.name) + " TV " + fmt(tv));
    out.note(std::string(test_case.name) + ": TV = " + fmt(tv) +
             ", acceptance rate = " + fmt(result.acceptance_rate()));
  }
}

void criterion_6_detailed_balance(Outcome& out) {
  double worst_db = 0.0, worst_stat = 0.0;
  for (int n = 3; n <= 5; ++n) {
    auto sets = enumerate_causal_sets(n);
    QuantumProposalParams weighted_params;
    auto kernels =
        quantum_kernels(sets, weighted_params, shared_samples(weighted_params, n, 6));
    TransitionMatrix quantum_mean = average_kernels(kernels);

    for (auto rule : {AcceptanceRule::uniform_validity(), AcceptanceRule::metropolis(0.004)}) {
      auto nu = stationary_distribution(n, rule);
      std::vector<TransitionMatrix> transition_matrices;
      for (auto strategy : {ProposalStrategy::relation(), ProposalStrategy::link(),
                            ProposalStrategy::classical_mixed()}) {
        transition_matrices.push_back(
            apply_acceptance(classical_proposal_kernel(sets, strategy), sets, rule));
      }
      transition_matrices.push_back(apply_acceptance(quantum_mean, sets, rule));
      for (const auto& t : transition_matrices) {
        for (std::size_t a = 0; a < t.order; ++a) {
          for (std::size_t b = 0; b < t.order; ++b) {
            worst_db = std::max(worst_db, std::abs(nu[a] * t.at(a, b) - nu[b] * t.at(b, a)));
          }
        }
        for (std::size_t b = 0; b < t.order; ++b) {
          double column = 0.0;
          for (std::size_t a = 0; a < t.order; ++a) column += nu[a] * t.at(a, b);
          worst_stat = std::max(worst_stat, std::abs(column - nu[b]));
        }
      }
    }
  }
  out.require(worst_db <= 1e-9, "detailed-balance residual " + fmt(worst_db));
  out.require(worst_stat <= 1e-9, "stationarity residual " + fmt(worst_stat));
  out.note("max residuals: reversibility " + fmt(worst_db) + ", stationarity " + fmt(worst_stat));
}

void criterion_7_uniform_scaling(Outcome& out) {
  AcceptanceRule rule = AcceptanceRule::uniform_validity();
  ProposalStrategy quantum = ProposalStrategy::quantum_uniform();

  std::vector<std::pair<int, GapResult>> q_gaps, c_gaps, cl_gaps, cr_gaps;
  for (int n = 3; n <= 5; ++n) {
    auto sets = enumerate_causal_sets(n);
    auto nu = stationary_distribution(n, rule);
    auto kernels = quantum_kernels(sets, quantum.quantum, shared_samples(quantum.quantum, n, 7));
    q_gaps.emplace_back(n, jackknife_gap(kernels, sets, rule));
    auto classical_gap = [&](const ProposalStrategy& strategy) {
      return spectral_gap(apply_acceptance(classical_proposal_kernel(sets, strategy), sets, rule),
                          nu);
    };
    c_gaps.emplace_back(n, classical_gap(ProposalStrategy::classical_mixed()));
    cl_gaps.emplace_back(n, classical_gap(ProposalStrategy::link()));
    cr_gaps.emplace_back(n, classical_gap(ProposalStrategy::relation()));
  }
  for (std::size_t i = 0; i < q_gaps.size(); ++i) {
    out.note("N=" + std::to_string(q_gaps[i].first) + ": delta_Q = " + fmt(q_gaps[i].second.delta) +
             " +- " + fmt(q_gaps[i].second.error) + ", delta_C = " + fmt(c_gaps[i].second.delta));
  }
  ScalingFit k_q = fit_scaling(q_gaps);
  ScalingFit k_c = fit_scaling(c_gaps);
  ScalingFit k_cl = fit_scaling(cl_gaps);
  ScalingFit k_cr = fit_scaling(cr_gaps);
  out.note("k_Q = " + fmt(k_q.k) + "(" + fmt(k_q.k_error) + "), k_C = " + fmt(k_c.k) + "(" +
           fmt(k_c.k_error) + "), k_CL = " + fmt(k_cl.k) + ", k_CR = " + fmt(k_cr.k));
  out.require(k_q.k < k_c.k - 0.15,
              "ordering k_Q < k_C - 0.15 (k_Q = " + fmt(k_q.k) + ", k_C = " + fmt(k_c.k) + ")");
  out.warn_if(std::abs(k_q.k - 0.17) > 0.15,
              "soft target k_Q ~ 0.17(5): got " + fmt(k_q.k) + " (outside +-0.15 window)");
  out.warn_if(std::abs(k_c.k - 0.51) > 0.15,
              "soft target k_C ~ 0.51(4): got " + fmt(k_c.k) + " (outside +-0.15 window)");
}

void criterion_8_weighted_gaps(Outcome& out) {
  AcceptanceRule rule = AcceptanceRule::metropolis(0.004);
  ProposalStrategy quantum = ProposalStrategy::quantum_weighted();

  std::vector<std::pair<int, GapResult>> q_gaps, c_gaps;
  for (int n = 3; n <= 5; ++n) {
    auto sets = enumerate_causal_sets(n);
    auto nu = stationary_distribution(n, rule);
    auto kernels = quantum_kernels(sets, quantum.quantum, shared_samples(quantum.quantum, n, 8));
    q_gaps.emplace_back(n, jackknife_gap(kernels, sets, rule));
    c_gaps.emplace_back(
        n, spectral_gap(apply_acceptance(
                            classical_proposal_kernel(sets, ProposalStrategy::classical_mixed()),
                            sets, rule),
                        nu));
  }
  for (std::size_t i = 0; i < q_gaps.size(); ++i) {
    int n = q_gaps[i].first;
    double dq = q_gaps[i].second.delta;
    double dc = c_gaps[i].second.delta;
    out.note("N=" + std::to_string(n) + ": delta_Q = " + fmt(dq) + " +- " +
             fmt(q_gaps[i].second.error) + ", delta_C = " + fmt(dc));
    out.require(dq > dc, "delta_quantum > delta_classical at N=" + std::to_string(n) +
                             " (got " + fmt(dq) + " vs " + fmt(dc) + ")");
    if (n == 3 && dq <= dc) {
      out.note("note: the N=3 comparison cannot pass under the pinned parameter ranges;");
      out.note("the classical kernel is exact (0.333) while the sample-averaged quantum");
      out.note("kernel tops out near 0.29 for any seed or alpha scale. At N=3 the three");
      out.note("action minimizers are connected by zero-cost single flips, so the");
      out.note("classical gap has not collapsed yet. N=4, N=5 and the ratio test below");
      out.note("carry the low-temperature claim.");
    }
  }
  double ratio = q_gaps.back().second.delta / c_gaps.back().second.delta;
  out.require(ratio >= 3.0, "N=5 gap ratio " + fmt(ratio) + " >= 3");
  out.note("N=5 quantum/classical gap ratio = " + fmt(ratio));
  // The N=3 comparison cannot pass under the pinned parameter ranges: the
  // classical kernel is exact (delta_C(3) = 0.333) and the sample-averaged
  // quantum kernel tops out near 0.29 over any seed or alpha override; at
  // N=3 the landscape has three minimizers connected by zero-cost single
  // flips, so the classical gap has not collapsed yet. The N=4, N=5
  // comparisons and the ratio test carry the figure's claim.
  ScalingFit k_q = fit_scaling(q_gaps);
  ScalingFit k_c = fit_scaling(c_gaps);
  out.note("k_Q = " + fmt(k_q.k) + "(" + fmt(k_q.k_error) + "), k_C = " + fmt(k_c.k) + "(" +
           fmt(k_c.k_error) + ")");
  out.warn_if(std::abs(k_q.k - 2.09) > 0.5, "soft reference k_Q ~ 2.09(8): got " + fmt(k_q.k));
  out.warn_if(std::abs(k_c.k - 4.3) > 2.5, "soft reference k_C ~ 4.3(4): got " + fmt(k_c.k));
}

void criterion_9_thermalization_bounds(Outcome& out) {
  auto [lower, upper] = thermalization_bounds(0.5, 0.01, 1.0 / 7.0);
  // hand computation: (1/delta - 1) ln(1/(2 alpha)) = ln 50 = 3.912023,
  // (1/delta) ln(1/(alpha min_nu)) = 2 ln 700 = 13.102161; the pair is
  // quoted as (3.912, 13.10) at three and two decimals
  out.require(std::abs(lower - std::log(50.0)) <= 1e-12, "lower vs ln 50");
  out.require(std::abs(upper - 2.0 * std::log(700.0)) <= 1e-12, "upper vs 2 ln 700");
  out.require(std::abs(lower - 3.912) <= 1e-3, "lower bound " + fmt(lower));
  out.require(std::round(upper * 100.0) / 100.0 == 13.10, "upper bound rounds to 13.10");
  out.note("bounds at (0.5, 0.01, 1/7): (" + fmt(lower) + ", " + fmt(upper) + ")");

  int checked = 0;
  bool ordered = true;
  for (int i = 1; i <= 10; ++i) {
    double delta = i / 10.0;
    for (int j = 0; j < 10; ++j) {
      double alpha = 0.001 * std::pow(400.0, j / 9.0);  // 0.001 .. 0.4
      for (int k = 1; k <= 10; ++k) {
        double min_nu = std::min(1.0, 2.0 * alpha) * k / 10.0;
        auto [lo, hi] = thermalization_bounds(delta, alpha, min_nu);
        ordered = ordered && lo <= hi;
        ++checked;
      }
    }
  }
  out.require(ordered, "lower <= upper on the grid");
  out.note("ordered on all " + std::to_string(checked) + " grid points");
}

void criterion_10_exact_encoding(Outcome& out) {
  for (int n = 3; n <= 5; ++n) {
    double lambda = default_penalty_weight(n);
    EncodingReport report = verify_encoding(n, lambda);
    out.require(report.passed(), "verify_encoding at n=" + std::to_string(n));
    out.note("n=" + std::to_string(n) + ": " + std::to_string(report.qubit_count) + " qubits, " +
             std::to_string(report.sets_checked) + " sets, " +
             std::to_string(report.corruptions_checked) + " corruptions, min margin " +
             fmt(report.min_margin) + ", min safe lambda " + fmt(report.min_safe_lambda));
    for (const auto& failure : report.failures) out.note("  " + failure);
  }
  // O(N^3 log N) regression over the layout sizes
  auto table = qubit_count_table(3, 8);
  double lo = 1e300, hi = 0.0;
  for (const auto& [n, count] : table) {
    double c = count / (std::pow(n, 3.0) * std::log2(n));
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  out.require(hi / lo < 2.0, "qubit-count constant spread " + fmt(hi / lo));
  out.note("qubit counts / (N^3 log2 N) span " + fmt(lo) + " .. " + fmt(hi));
}

void criterion_11_jackknife(Outcome& out) {
  auto sets = enumerate_causal_sets(3);
  AcceptanceRule rule = AcceptanceRule::uniform_validity();

  TransitionMatrix kernel = classical_proposal_kernel(sets, ProposalStrategy::relation());
  std::vector<TransitionMatrix> identical(10, kernel);
  GapResult flat = jackknife_gap(identical, sets, rule);
  // zero up to the rounding of the leave-one-out averages
  out.require(flat.error <= 1e-14, "identical-sample error " + fmt(flat.error));

  // direct reimplementation oracle on 10 genuine samples
  QuantumProposalParams params;
  params.r_bd_range = {0.0, 0.0};
  auto kernels = quantum_kernels(sets, params, shared_samples(params, 3, 11));
  GapResult mine = jackknife_gap(kernels, sets, rule);

  auto nu = stationary_distribution(3, rule);
  auto gap_without = [&](int skip) {
    TransitionMatrix mean = TransitionMatrix::zero(kernels[0].order);
    int used = 0;
    for (int i = 0; i < static_cast<int>(kernels.size()); ++i) {
      if (i == skip) continue;
      ++used;
      for (std::size_t e = 0; e < mean.entries.size(); ++e) {
        mean.entries[e] += kernels[i].entries[e];
      }
    }
    for (auto& value : mean.entries) value /= used;
    return spectral_gap(apply_acceptance(mean, sets, rule), nu).delta;
  };
  double full = gap_without(-1);
  std::vector<double> loo;
  for (int skip = 0; skip < 10; ++skip) loo.push_back(gap_without(skip));
  double mean = 0.0;
  for (double v : loo) mean += v;
  mean /= loo.size();
  double variance = 0.0;
  for (double v : loo) variance += (v - mean) * (v - mean);
  double oracle_error = std::sqrt(9.0 / 10.0 * variance);

  out.require(std::abs(mine.delta - full) <= 1e-12, "delta vs oracle");
  out.require(std::abs(mine.error - oracle_error) <= 1e-12, "error vs oracle");
  out.note("delta = " + fmt(mine.delta) + " +- " + fmt(mine.error) +
           " (oracle +- " + fmt(oracle_error) + ")");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "enumeration matches brute force (N <= 5)", 10.0, criterion_1_enumeration},
      {2, "Hamiltonian diagonal oracles (N <= 4)", 0.0, criterion_2_diagonal_oracles},
      {3, "truncation error scales as eps^(7/2)", 5.0, criterion_3_approximation_order},
      {4, "unitarity and proposal symmetry", 0.0, criterion_4_unitarity_symmetry},
      {5, "chains reach their stationary laws (N = 4)", 300.0, criterion_5_stationary_laws},
      {6, "detailed balance and stationarity (N <= 5)", 0.0, criterion_6_detailed_balance},
      {7, "uniform-sampling gap scaling (N = 3..5)", 1800.0, criterion_7_uniform_scaling},
      {8, "weighted-sampling gaps at T = 0.004", 0.0, criterion_8_weighted_gaps},
      {9, "thermalization bounds", 0.0, criterion_9_thermalization_bounds},
      {10, "exact 2d encoding verification (N = 3..5)", 60.0, criterion_10_exact_encoding},
      {11, "jackknife errors", 0.0, criterion_11_jackknife},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      criterion.run(outcome);
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.details.push_back(std::string("exception: ") + e.what());
    }
    double seconds = elapsed_seconds(start);
    if (criterion.budget_seconds > 0.0 && seconds >= criterion.budget_seconds) {
      outcome.passed = false;
      outcome.details.push_back("runtime " + fmt(seconds) + " s exceeds the " +
                                fmt(criterion.budget_seconds) + " s budget");
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] %02d %s (%.2f s)\n", outcome.passed ? "PASS" : "FAIL", criterion.id,
                criterion.name, seconds);
    for (const auto& line : outcome.details) std::printf("       %s\n", line.c_str());
    for (const auto& line : outcome.warnings) std::printf("  [WARN] %s\n", line.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
