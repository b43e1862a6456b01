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

#include "causetq/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace causetq {

namespace {

constexpr double kStochasticTol = 1e-10;
constexpr double kReversibilityTol = 1e-9;

void parallel_rows(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(workers, static_cast<int>(count));
  pool.reserve(spawn);
  for (int w = 0; w < spawn; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::unordered_map<std::uint64_t, std::size_t> pattern_index(const std::vector<CausalSet>& sets) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i].matrix().pattern()] = i;
  return index;
}

}  // namespace

TransitionMatrix TransitionMatrix::zero(std::size_t order) {
  return {order, std::vector<double>(order * order, 0.0)};
}

double TransitionMatrix::row_sum(std::size_t a) const {
  double sum = 0.0;
  for (std::size_t b = 0; b < order; ++b) sum += at(a, b);
  return sum;
}

TransitionMatrix classical_proposal_kernel(const std::vector<CausalSet>& sets,
                                           const ProposalStrategy& strategy) {
  if (strategy.kind == StrategyKind::Quantum) {
    throw std::invalid_argument("classical_proposal_kernel: got a quantum strategy");
  }
  auto index = pattern_index(sets);
  TransitionMatrix kernel = TransitionMatrix::zero(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a) {
    std::vector<double> dist = proposal_distribution(sets[a], strategy);
    for (const auto& [pattern, b] : index) kernel.at(a, b) = dist[pattern];
  }
  return kernel;
}

TransitionMatrix quantum_proposal_kernel(const std::vector<CausalSet>& sets,
                                         const QuantumProposalParams& params,
                                         const QuantumParameterSample& sample, int workers) {
  if (sets.empty()) throw std::invalid_argument("quantum_proposal_kernel: no sets");
  QuantumProposalEngine engine(sets[0].cardinality(), params);
  auto index = pattern_index(sets);
  TransitionMatrix kernel = TransitionMatrix::zero(sets.size());
  parallel_rows(sets.size(), workers, [&](std::size_t a) {
    std::vector<double> dist = engine.distribution(sets[a], sample);
    for (const auto& [pattern, b] : index) kernel.at(a, b) = dist[pattern];
  });
  return kernel;
}

TransitionMatrix average_kernels(const std::vector<TransitionMatrix>& kernels) {
  if (kernels.empty()) throw std::invalid_argument("average_kernels: empty input");
  TransitionMatrix mean = TransitionMatrix::zero(kernels[0].order);
  for (const auto& kernel : kernels) {
    if (kernel.order != mean.order) {
      throw std::invalid_argument("average_kernels: kernel orders differ");
    }
    for (std::size_t i = 0; i < mean.entries.size(); ++i) mean.entries[i] += kernel.entries[i];
  }
  for (auto& value : mean.entries) value /= static_cast<double>(kernels.size());
  return mean;
}

TransitionMatrix apply_acceptance(const TransitionMatrix& proposal,
                                  const std::vector<CausalSet>& sets, const AcceptanceRule& rule) {
  if (proposal.order != sets.size()) {
    throw std::invalid_argument("apply_acceptance: kernel order does not match set count");
  }
  std::size_t m = sets.size();
  TransitionMatrix t = TransitionMatrix::zero(m);
  for (std::size_t a = 0; a < m; ++a) {
    double off = 0.0;
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      double mass = proposal.at(a, b) * acceptance_probability(rule, sets[a], sets[b]);
      t.at(a, b) = mass;
      off += mass;
    }
    t.at(a, a) = std::max(0.0, 1.0 - off);
  }
  return t;
}

TransitionMatrix build_transition_matrix(int n, const ProposalStrategy& strategy,
                                         const AcceptanceRule& rule,
                                         const std::vector<QuantumParameterSample>& samples,
                                         int max_cardinality, int workers) {
  auto sets = enumerate_causal_sets(n, max_cardinality);
  TransitionMatrix proposal;
  if (strategy.kind == StrategyKind::Quantum) {
    if (samples.empty()) {
      throw std::invalid_argument("build_transition_matrix: quantum strategy needs samples");
    }
    std::vector<TransitionMatrix> kernels;
    kernels.reserve(samples.size());
    for (const auto& sample : samples) {
      kernels.push_back(quantum_proposal_kernel(sets, strategy.quantum, sample, workers));
    }
    proposal = average_kernels(kernels);
  } else {
    proposal = classical_proposal_kernel(sets, strategy);
  }
  return apply_acceptance(proposal, sets, rule);
}

GapResult spectral_gap(const TransitionMatrix& t, const std::vector<double>& stationary) {
  std::size_t m = t.order;
  if (m == 0 || stationary.size() != m) {
    throw std::invalid_argument("spectral_gap: dimension mismatch");
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (std::abs(t.row_sum(a) - 1.0) > kStochasticTol) {
      throw std::invalid_argument("spectral_gap: matrix is not row-stochastic");
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (t.at(a, b) < -kStochasticTol) {
        throw std::invalid_argument("spectral_gap: negative entry");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!(stationary[a] > 0.0)) {
      throw std::invalid_argument(
          "spectral_gap: stationary law has non-positive mass (underflow?)");
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (std::abs(stationary[a] * t.at(a, b) - stationary[b] * t.at(b, a)) > kReversibilityTol) {
        throw std::invalid_argument("spectral_gap: detailed balance violated");
      }
    }
  }

  // similar symmetric matrix sqrt(nu_a/nu_b) T_ab; same spectrum, stable solve
  Eigen::MatrixXd sym(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      sym(a, b) = t.at(a, b) * std::sqrt(stationary[a] / stationary[b]);
    }
  }
  sym = (sym + sym.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_gap: eigensolver failed");
  }
  const auto& eigenvalues = solver.eigenvalues();
  // drop the single Perron eigenvalue (the one closest to +1)
  int perron = 0;
  double best = std::abs(eigenvalues[0] - 1.0);
  for (int i = 1; i < eigenvalues.size(); ++i) {
    double d = std::abs(eigenvalues[i] - 1.0);
    if (d < best) {
      best = d;
      perron = i;
    }
  }
  double second = 0.0;
  for (int i = 0; i < eigenvalues.size(); ++i) {
    if (i != perron) second = std::max(second, std::abs(eigenvalues[i]));
  }
  GapResult result;
  result.delta = std::clamp(1.0 - second, 0.0, 1.0);
  return result;
}

std::pair<double, double> thermalization_bounds(double delta, double alpha_err, double min_nu) {
  if (!(delta > 0.0) || delta > 1.0) throw std::invalid_argument("thermalization_bounds: delta");
  if (!(alpha_err > 0.0) || alpha_err >= 1.0) {
    throw std::invalid_argument("thermalization_bounds: alpha");
  }
  if (!(min_nu > 0.0) || min_nu > 1.0) throw std::invalid_argument("thermalization_bounds: min_nu");
  double lower = (1.0 / delta - 1.0) * std::log(1.0 / (2.0 * alpha_err));
  double upper = (1.0 / delta) * std::log(1.0 / (alpha_err * min_nu));
  return {lower, upper};
}

GapResult jackknife_gap(const std::vector<TransitionMatrix>& per_sample_kernels,
                        const std::vector<CausalSet>& sets, const AcceptanceRule& rule) {
  std::size_t count = per_sample_kernels.size();
  if (count < 2) throw std::invalid_argument("jackknife_gap: need at least 2 samples");
  if (sets.empty()) throw std::invalid_argument("jackknife_gap: no sets");
  std::vector<double> stationary =
      stationary_distribution(sets[0].cardinality(), rule, sets[0].cardinality());

  GapResult full = spectral_gap(apply_acceptance(average_kernels(per_sample_kernels), sets, rule),
                                stationary);
  std::vector<double> loo(count);
  for (std::size_t skip = 0; skip < count; ++skip) {
    std::vector<TransitionMatrix> subset;
    subset.reserve(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      if (i != skip) subset.push_back(per_sample_kernels[i]);
    }
    loo[skip] =
        spectral_gap(apply_acceptance(average_kernels(subset), sets, rule), stationary).delta;
  }
  double mean = 0.0;
  for (double v : loo) mean += v;
  mean /= static_cast<double>(count);
  double variance = 0.0;
  for (double v : loo) variance += (v - mean) * (v - mean);
  GapResult result;
  result.delta = full.delta;
  result.error = std::sqrt((static_cast<double>(count) - 1.0) / static_cast<double>(count) *
                           variance);
  return result;
}

ScalingFit fit_scaling(const std::vector<std::pair<int, GapResult>>& gaps) {
  if (gaps.size() < 3) throw std::invalid_argument("fit_scaling: need at least 3 cardinalities");
  ScalingFit fit;
  for (const auto& [n, gap] : gaps) {
    if (gap.delta > 0.0) {
      fit.points.emplace_back(n, gap.delta);
    } else {
      fit.excluded.push_back(n);
    }
  }
  std::size_t m = fit.points.size();
  if (m < 2) throw std::invalid_argument("fit_scaling: fewer than 2 positive gaps");
  double sx = 0.0, sy = 0.0;
  for (const auto& [n, delta] : fit.points) {
    sx += n;
    sy += std::log(delta);
  }
  double xbar = sx / m, ybar = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, delta] : fit.points) {
    double dx = n - xbar;
    sxx += dx * dx;
    sxy += dx * (std::log(delta) - ybar);
  }
  double slope = sxy / sxx;
  fit.k = -slope;
  if (m > 2) {
    double rss = 0.0;
    for (const auto& [n, delta] : fit.points) {
      double predicted = ybar + slope * (n - xbar);
      double r = std::log(delta) - predicted;
      rss += r * r;
    }
    fit.k_error = std::sqrt(rss / (static_cast<double>(m) - 2.0) / sxx);
  }
  return fit;
}

}  // namespace causetq
