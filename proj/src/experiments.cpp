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

#include "causetq/experiments.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "causetq/errors.hpp"
#include "causetq/exactbd.hpp"
#include "causetq/spectral.hpp"

namespace causetq {

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string hash_hex(std::uint64_t hash) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

// CSV sink with the reproducibility comment line; "-" writes to stdout.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const ExperimentConfig& config) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file \"" + path + "\"");
    }
    out() << "# causetq " << kVersion << " config_hash=" << hash_hex(config.config_hash)
          << " seed=" << (config.seed ? std::to_string(*config.seed) : std::string("none"))
          << "\n";
  }

  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  void row(const std::vector<std::string>& cells) {
    std::ostream& o = out();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) o << ',';
      o << cells[i];
    }
    o << '\n';
  }

 private:
  std::ofstream file_;
};

int effective_workers(const ExperimentConfig& config) {
  if (const char* env = std::getenv(kWorkersEnvVar)) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return config.workers;
}

void parallel_jobs(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(workers, static_cast<int>(count));
  for (int w = 0; w < spawn; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
}

std::string abundance_text(const AbundanceVector& a) {
  std::string out;
  for (std::size_t j = 0; j < a.counts.size(); ++j) {
    if (j) out += ';';
    out += std::to_string(a.counts[j]);
  }
  return out;
}

int run_enumerate(const ExperimentConfig& config) {
  auto sets = enumerate_causal_sets(config.cardinality, config.max_cardinality);
  std::ofstream file;
  if (config.output != "-") {
    file.open(config.output);
    if (!file) throw ConfigError("cannot open output file \"" + config.output + "\"");
  }
  std::ostream& out = file.is_open() ? file : std::cout;
  for (const auto& s : sets) out << to_string(s) << '\n';
  return 0;
}

int run_action(const ExperimentConfig& config) {
  std::ifstream file;
  if (config.input != "-") {
    file.open(config.input);
    if (!file) throw ConfigError("cannot open input file \"" + config.input + "\"");
  }
  std::istream& in = file.is_open() ? file : std::cin;

  CsvWriter csv(config.output, config);
  csv.row({"set", "cardinality", "abundances", "action", "truncated", "trunc_error"});
  ActionSpec action{config.dimension, config.epsilon, std::nullopt};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    CausalSet s = parse_causal_set(line);
    double exact = action.value(s);
    double truncated = bd_truncated(s, config.epsilon, config.dimension);
    csv.row({to_string(s), std::to_string(s.cardinality()), abundance_text(abundances(s)),
             fmt(exact), fmt(truncated), fmt(truncated - exact)});
  }
  return 0;
}

int run_sample(const ExperimentConfig& config) {
  Rng root(*config.seed);
  Rng init_rng = root.child(0xC0);
  Rng chain_rng = root.child(0xC1);
  CausalSet initial = random_causal_set(config.cardinality, init_rng);
  AcceptanceRule rule = config.acceptance_rule();
  const ProposalStrategy& strategy = config.strategies.front();
  ChainOptions options{config.steps, config.burn_in, config.thin};
  ChainResult result = run_chain(initial, strategy, rule, options, chain_rng);

  CsvWriter csv(config.output, config);
  csv.row({"step", "set", "action", "accepted"});
  for (const auto& sample : result.samples) {
    csv.row({std::to_string(sample.step), to_string(sample.set), fmt(sample.action),
             sample.accepted ? "1" : "0"});
  }
  csv.out() << "# acceptance_rate=" << fmt(result.acceptance_rate()) << "\n";
  return 0;
}

// One strategy's gap at one (n, T); quantum strategies carry jackknife errors.
GapResult strategy_gap(const ProposalStrategy& strategy, int n, const AcceptanceRule& rule,
                       const ExperimentConfig& config, Rng job_rng, int workers) {
  auto sets = enumerate_causal_sets(n, config.max_cardinality);
  if (strategy.kind == StrategyKind::Quantum) {
    auto samples =
        draw_parameter_samples(strategy.quantum, strategy.quantum.sample_count, job_rng);
    std::vector<TransitionMatrix> kernels;
    kernels.reserve(samples.size());
    for (const auto& sample : samples) {
      kernels.push_back(quantum_proposal_kernel(sets, strategy.quantum, sample, workers));
    }
    return jackknife_gap(kernels, sets, rule);
  }
  TransitionMatrix t = apply_acceptance(classical_proposal_kernel(sets, strategy), sets, rule);
  return spectral_gap(t, stationary_distribution(n, rule, config.max_cardinality));
}

int run_spectral_gap(const ExperimentConfig& config) {
  Rng root(config.seed.value_or(0));
  int workers = effective_workers(config);
  CsvWriter csv(config.output, config);
  csv.row({"strategy", "cardinality", "temperature", "rule", "delta", "delta_error"});
  AcceptanceRule rule = config.acceptance_rule();
  for (std::size_t si = 0; si < config.strategies.size(); ++si) {
    const auto& strategy = config.strategies[si];
    GapResult gap = strategy_gap(strategy, config.cardinality, rule, config,
                                 root.child(si, config.cardinality), workers);
    csv.row({to_string(strategy.kind), std::to_string(config.cardinality),
             fmt(config.temperature), config.rule, fmt(gap.delta), fmt(gap.error)});
  }
  return 0;
}

int run_sweep_n(const ExperimentConfig& config) {
  Rng root(config.seed.value_or(0));
  int workers = effective_workers(config);
  AcceptanceRule rule = config.acceptance_rule();

  struct Job {
    std::size_t strategy_index;
    int n;
  };
  std::vector<Job> jobs;
  for (std::size_t si = 0; si < config.strategies.size(); ++si) {
    for (int n = config.cardinality_min; n <= config.cardinality_max; ++n) {
      jobs.push_back({si, n});
    }
  }
  std::vector<GapResult> results(jobs.size());
  parallel_jobs(jobs.size(), workers, [&](std::size_t i) {
    const Job& job = jobs[i];
    results[i] = strategy_gap(config.strategies[job.strategy_index], job.n, rule, config,
                              root.child(job.strategy_index, job.n), 1);
  });

  CsvWriter csv(config.output, config);
  csv.row({"strategy", "cardinality", "temperature", "rule", "delta", "delta_error"});
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    csv.row({to_string(config.strategies[jobs[i].strategy_index].kind),
             std::to_string(jobs[i].n), fmt(config.temperature), config.rule,
             fmt(results[i].delta), fmt(results[i].error)});
  }

  // companion fit file <stem>_fits.csv (stdout output keeps fits inline)
  std::string fit_path = "-";
  if (config.output != "-") {
    std::string stem = config.output;
    auto dot = stem.rfind('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    fit_path = stem + "_fits.csv";
  }
  CsvWriter fits(fit_path, config);
  fits.row({"strategy", "k", "k_error", "points", "excluded"});
  for (std::size_t si = 0; si < config.strategies.size(); ++si) {
    std::vector<std::pair<int, GapResult>> gaps;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (jobs[i].strategy_index == si) gaps.emplace_back(jobs[i].n, results[i]);
    }
    if (gaps.size() < 3) continue;
    ScalingFit fit = fit_scaling(gaps);
    fits.row({to_string(config.strategies[si].kind), fmt(fit.k), fmt(fit.k_error),
              std::to_string(fit.points.size()), std::to_string(fit.excluded.size())});
  }
  return 0;
}

int run_sweep_t(const ExperimentConfig& config) {
  Rng root(config.seed.value_or(0));
  int workers = effective_workers(config);
  std::vector<double> grid = config.temperature_grid;
  if (grid.empty()) grid = {0.002, 0.004, 0.01, 0.02, 0.05, 0.1};
  int n = config.cardinality;
  auto sets = enumerate_causal_sets(n, config.max_cardinality);

  // proposal kernels do not depend on temperature; build once per strategy
  std::vector<std::vector<TransitionMatrix>> kernels(config.strategies.size());
  parallel_jobs(config.strategies.size(), workers, [&](std::size_t si) {
    const auto& strategy = config.strategies[si];
    if (strategy.kind == StrategyKind::Quantum) {
      Rng job_rng = root.child(si, n);
      auto samples =
          draw_parameter_samples(strategy.quantum, strategy.quantum.sample_count, job_rng);
      for (const auto& sample : samples) {
        kernels[si].push_back(quantum_proposal_kernel(sets, strategy.quantum, sample, 1));
      }
    } else {
      kernels[si].push_back(classical_proposal_kernel(sets, strategy));
    }
  });

  CsvWriter csv(config.output, config);
  csv.row({"strategy", "cardinality", "temperature", "delta", "delta_error"});
  for (std::size_t si = 0; si < config.strategies.size(); ++si) {
    for (double temperature : grid) {
      AcceptanceRule rule = config.acceptance_rule(temperature);
      GapResult gap;
      if (config.strategies[si].kind == StrategyKind::Quantum) {
        gap = jackknife_gap(kernels[si], sets, rule);
      } else {
        TransitionMatrix t = apply_acceptance(kernels[si][0], sets, rule);
        gap = spectral_gap(t, stationary_distribution(n, rule, config.max_cardinality));
      }
      csv.row({to_string(config.strategies[si].kind), std::to_string(n), fmt(temperature),
               fmt(gap.delta), fmt(gap.error)});
    }
  }
  return 0;
}

int run_exactbd_verify(const ExperimentConfig& config) {
  CsvWriter csv(config.output, config);
  csv.row({"cardinality", "qubits", "lambda", "sets", "corruptions", "min_margin",
           "min_safe_lambda", "passed"});
  bool all_passed = true;
  for (int n = config.exactbd_min; n <= config.exactbd_max; ++n) {
    double lambda = config.lambda ? *config.lambda : default_penalty_weight(n);
    EncodingReport report = verify_encoding(n, lambda);
    all_passed = all_passed && report.passed();
    csv.row({std::to_string(n), std::to_string(report.qubit_count), fmt(report.lambda),
             std::to_string(report.sets_checked), std::to_string(report.corruptions_checked),
             fmt(report.min_margin), fmt(report.min_safe_lambda),
             report.passed() ? "1" : "0"});
    std::cerr << "exactbd n=" << n << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
              << report.sets_checked << " sets, " << report.corruptions_checked
              << " corruptions, min margin " << report.min_margin << ")\n";
    for (const auto& failure : report.failures) std::cerr << "  " << failure << "\n";
  }
  // qubit-count scaling table
  csv.out() << "# qubit_count_table\n";
  for (const auto& [n, count] : qubit_count_table(3, 8)) {
    csv.out() << "# n=" << n << " qubits=" << count << "\n";
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int run_experiment(const ExperimentConfig& config) {
  switch (config.experiment) {
    case ExperimentKind::Enumerate: return run_enumerate(config);
    case ExperimentKind::Action: return run_action(config);
    case ExperimentKind::Sample: return run_sample(config);
    case ExperimentKind::SpectralGap: return run_spectral_gap(config);
    case ExperimentKind::SweepN: return run_sweep_n(config);
    case ExperimentKind::SweepT: return run_sweep_t(config);
    case ExperimentKind::ExactBdVerify: return run_exactbd_verify(config);
  }
  throw std::logic_error("run_experiment: unknown experiment kind");
}

}  // namespace causetq
