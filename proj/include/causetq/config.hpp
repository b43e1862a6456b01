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

#include "causetq/mcmc.hpp"
#include "causetq/proposals.hpp"

namespace causetq {

enum class ExperimentKind {
  Enumerate,
  Action,
  Sample,
  SpectralGap,
  SweepN,
  SweepT,
  ExactBdVerify,
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Enumerate;
  int cardinality = 4;
  int cardinality_min = 3;
  int cardinality_max = 5;
  double temperature = 0.004;
  std::vector<double> temperature_grid;
  int dimension = 4;
  double epsilon = 0.1;
  std::string rule = "uniform";  // "uniform" | "metropolis"
  long long steps = 100000;
  long long burn_in = -1;  // -1: steps / 10
  long long thin = 1;
  std::optional<std::uint64_t> seed;
  std::vector<ProposalStrategy> strategies;
  int max_cardinality = kDefaultMaxCardinality;
  std::optional<double> lambda;  // exactbd-verify penalty weight
  int exactbd_min = 3;
  int exactbd_max = 5;
  std::string input = "-";
  std::string output = "-";
  int workers = 1;

  // canonical JSON dump of the effective configuration
  std::string canonical_text;
  std::uint64_t config_hash = 0;

  AcceptanceRule acceptance_rule(double temperature_override = -1.0) const;
};

// Parses, fills defaults (implementation-appendix parameter ranges, epsilon
// 0.1, T 0.004), normalizes (r_bd range ascending) and range-checks. Unknown
// keys are errors. Throws ConfigError with the offending key.
ExperimentConfig validate_config(const std::string& json_text);

}  // namespace causetq
