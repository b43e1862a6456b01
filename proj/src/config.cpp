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

#include "causetq/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "causetq/errors.hpp"

namespace causetq {

using nlohmann::json;

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Enumerate: return "enumerate";
    case ExperimentKind::Action: return "action";
    case ExperimentKind::Sample: return "sample";
    case ExperimentKind::SpectralGap: return "spectral-gap";
    case ExperimentKind::SweepN: return "sweep-N";
    case ExperimentKind::SweepT: return "sweep-T";
    case ExperimentKind::ExactBdVerify: return "exactbd-verify";
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  if (name == "enumerate") return ExperimentKind::Enumerate;
  if (name == "action") return ExperimentKind::Action;
  if (name == "sample") return ExperimentKind::Sample;
  if (name == "spectral-gap") return ExperimentKind::SpectralGap;
  if (name == "sweep-N" || name == "sweep-n") return ExperimentKind::SweepN;
  if (name == "sweep-T" || name == "sweep-t") return ExperimentKind::SweepT;
  if (name == "exactbd-verify") return ExperimentKind::ExactBdVerify;
  throw ConfigError("unknown experiment kind \"" + name + "\"");
}

AcceptanceRule ExperimentConfig::acceptance_rule(double temperature_override) const {
  if (rule == "uniform") return AcceptanceRule::uniform_validity();
  double t = temperature_override > 0.0 ? temperature_override : temperature;
  ActionSpec action;
  action.dimension = dimension;
  action.epsilon = epsilon;
  return AcceptanceRule::metropolis(t, action);
}

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x00000100000001b3ULL;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : text) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

void check_keys(const json& object, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown key \"" + key + "\" in " + where);
    }
  }
}

template <typename T>
T get_or(const json& object, const std::string& key, T fallback) {
  if (!object.contains(key)) return fallback;
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("key \"" + key + "\" has the wrong type");
  }
}

std::pair<double, double> get_range(const json& object, const std::string& key,
                                    std::pair<double, double> fallback) {
  if (!object.contains(key)) return fallback;
  const json& entry = object.at(key);
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw ConfigError("key \"" + key + "\" must be a two-element numeric array");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

StrategyKind strategy_kind_from_string(const std::string& name) {
  if (name == "relation") return StrategyKind::Relation;
  if (name == "link") return StrategyKind::Link;
  if (name == "classical-mixed") return StrategyKind::ClassicalMixed;
  if (name == "quantum") return StrategyKind::Quantum;
  throw ConfigError("unknown strategy kind \"" + name + "\"");
}

ProposalStrategy parse_strategy(const json& block, double default_epsilon) {
  check_keys(block,
             {"kind", "r_tc_range", "r_bd_range", "t_range", "epsilon", "penalty", "samples",
              "mix_weight", "alpha_tc", "alpha_bd"},
             "strategy block");
  ProposalStrategy strategy;
  strategy.kind = strategy_kind_from_string(get_or<std::string>(block, "kind", "quantum"));
  strategy.relation_weight = get_or<double>(block, "mix_weight", 0.5);
  if (strategy.relation_weight < 0.0 || strategy.relation_weight > 1.0) {
    throw ConfigError("mix_weight must lie in [0, 1]");
  }

  QuantumProposalParams& q = strategy.quantum;
  q.epsilon = get_or<double>(block, "epsilon", default_epsilon);
  q.r_tc_range = get_range(block, "r_tc_range", q.r_tc_range);
  q.r_bd_range = get_range(block, "r_bd_range", q.r_bd_range);
  // normalization rule: ranges are stored ascending
  if (q.r_tc_range.first > q.r_tc_range.second) std::swap(q.r_tc_range.first, q.r_tc_range.second);
  if (q.r_bd_range.first > q.r_bd_range.second) std::swap(q.r_bd_range.first, q.r_bd_range.second);
  auto check_unit = [](std::pair<double, double> range, const char* name) {
    if (range.first < 0.0 || range.second > 1.0) {
      throw ConfigError(std::string(name) + " must lie within [0, 1]");
    }
  };
  check_unit(q.r_tc_range, "r_tc_range");
  check_unit(q.r_bd_range, "r_bd_range");
  auto t_range = get_range(block, "t_range", {q.t_min, q.t_max});
  q.t_min = static_cast<int>(t_range.first);
  q.t_max = static_cast<int>(t_range.second);
  if (q.t_min < 0 || q.t_max < q.t_min) throw ConfigError("t_range must be 0 <= t_min <= t_max");
  q.penalty = get_or<double>(block, "penalty", 1.0);
  if (!(q.penalty > 0.0)) throw ConfigError("penalty must be positive");
  q.sample_count = get_or<int>(block, "samples", 10);
  if (q.sample_count < 2) throw ConfigError("samples must be at least 2 (jackknife needs two)");
  if (block.contains("alpha_tc")) q.alpha_tc_override = block.at("alpha_tc").get<double>();
  if (block.contains("alpha_bd")) q.alpha_bd_override = block.at("alpha_bd").get<double>();
  if (strategy.kind == StrategyKind::Quantum &&
      (!(q.epsilon > 0.0) || q.epsilon >= 1.0)) {
    throw ConfigError("quantum strategy epsilon must lie in (0, 1)");
  }
  return strategy;
}

json strategy_to_json(const ProposalStrategy& s) {
  json block;
  block["kind"] = to_string(s.kind);
  block["mix_weight"] = s.relation_weight;
  if (s.kind == StrategyKind::Quantum) {
    block["r_tc_range"] = {s.quantum.r_tc_range.first, s.quantum.r_tc_range.second};
    block["r_bd_range"] = {s.quantum.r_bd_range.first, s.quantum.r_bd_range.second};
    block["t_range"] = {s.quantum.t_min, s.quantum.t_max};
    block["epsilon"] = s.quantum.epsilon;
    block["penalty"] = s.quantum.penalty;
    block["samples"] = s.quantum.sample_count;
    if (s.quantum.alpha_tc_override) block["alpha_tc"] = *s.quantum.alpha_tc_override;
    if (s.quantum.alpha_bd_override) block["alpha_bd"] = *s.quantum.alpha_bd_override;
  }
  return block;
}

bool experiment_is_stochastic(ExperimentKind kind, const std::vector<ProposalStrategy>& strategies) {
  switch (kind) {
    case ExperimentKind::Enumerate:
    case ExperimentKind::Action:
    case ExperimentKind::ExactBdVerify:
      return false;
    case ExperimentKind::Sample:
      return true;
    default:
      break;
  }
  // spectral experiments are stochastic once a quantum kernel is sampled
  return std::any_of(strategies.begin(), strategies.end(),
                     [](const ProposalStrategy& s) { return s.kind == StrategyKind::Quantum; });
}

}  // namespace

ExperimentConfig validate_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(root,
             {"experiment", "cardinality", "cardinality_min", "cardinality_max", "temperature",
              "temperature_grid", "dimension", "epsilon", "rule", "steps", "burn_in", "thin",
              "seed", "strategies", "max_cardinality", "lambda", "exactbd_min", "exactbd_max",
              "input", "output", "workers"},
             "config");

  ExperimentConfig config;
  config.experiment =
      experiment_kind_from_string(get_or<std::string>(root, "experiment", "enumerate"));
  config.cardinality = get_or<int>(root, "cardinality", 4);
  config.cardinality_min = get_or<int>(root, "cardinality_min", 3);
  config.cardinality_max = get_or<int>(root, "cardinality_max", 5);
  config.temperature = get_or<double>(root, "temperature", 0.004);
  if (root.contains("temperature_grid")) {
    for (const auto& value : root.at("temperature_grid")) {
      config.temperature_grid.push_back(value.get<double>());
    }
  }
  config.dimension = get_or<int>(root, "dimension", 4);
  config.epsilon = get_or<double>(root, "epsilon", 0.1);
  config.rule = get_or<std::string>(
      root, "rule", config.experiment == ExperimentKind::SweepT ? "metropolis" : "uniform");
  config.steps = get_or<long long>(root, "steps", 100000);
  config.burn_in = get_or<long long>(root, "burn_in", -1);
  config.thin = get_or<long long>(root, "thin", 1);
  if (root.contains("seed")) config.seed = root.at("seed").get<std::uint64_t>();
  config.max_cardinality = get_or<int>(root, "max_cardinality", kDefaultMaxCardinality);
  if (root.contains("lambda")) config.lambda = root.at("lambda").get<double>();
  config.exactbd_min = get_or<int>(root, "exactbd_min", 3);
  config.exactbd_max = get_or<int>(root, "exactbd_max", 5);
  config.input = get_or<std::string>(root, "input", "-");
  config.output = get_or<std::string>(root, "output", "-");
  config.workers = get_or<int>(root, "workers", 1);

  if (root.contains("strategies")) {
    if (!root.at("strategies").is_array()) throw ConfigError("strategies must be an array");
    for (const auto& block : root.at("strategies")) {
      config.strategies.push_back(parse_strategy(block, config.epsilon));
    }
  }
  if (config.strategies.empty()) {
    // the four curves of the scaling figures
    ProposalStrategy quantum = parse_strategy(json::object(), config.epsilon);
    if (config.rule == "uniform") quantum.quantum.r_bd_range = {0.0, 0.0};
    config.strategies = {quantum, ProposalStrategy::classical_mixed(),
                         ProposalStrategy::link(), ProposalStrategy::relation()};
  }

  // range checks
  if (!(config.temperature > 0.0)) throw ConfigError("temperature must be positive");
  for (double t : config.temperature_grid) {
    if (!(t > 0.0)) throw ConfigError("temperature_grid entries must be positive");
  }
  if (!(config.epsilon > 0.0) || config.epsilon > 1.0) {
    throw ConfigError("epsilon must lie in (0, 1]");
  }
  if (config.dimension < 2) throw ConfigError("dimension must be at least 2");
  if (config.rule != "uniform" && config.rule != "metropolis") {
    throw ConfigError("rule must be \"uniform\" or \"metropolis\"");
  }
  if (config.steps < 1) throw ConfigError("steps must be positive");
  if (config.burn_in >= 0 && config.steps <= config.burn_in) {
    throw ConfigError("steps must exceed burn_in");
  }
  if (config.thin < 1) throw ConfigError("thin must be positive");
  if (config.cardinality < 1) throw ConfigError("cardinality must be positive");
  if (config.cardinality_min < 1 || config.cardinality_max < config.cardinality_min) {
    throw ConfigError("cardinality range must satisfy 1 <= min <= max");
  }
  if (config.max_cardinality < 1) throw ConfigError("max_cardinality must be positive");
  if (config.lambda && !(*config.lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (config.exactbd_min < 2 || config.exactbd_max < config.exactbd_min) {
    throw ConfigError("exactbd range must satisfy 2 <= min <= max");
  }
  if (config.workers < 1) throw ConfigError("workers must be positive");
  if (experiment_is_stochastic(config.experiment, config.strategies) && !config.seed) {
    throw ConfigError("seed is mandatory for stochastic experiments");
  }
  if (config.experiment == ExperimentKind::SweepT && config.rule != "metropolis") {
    throw ConfigError("sweep-T requires the metropolis rule");
  }

  // canonical effective config; key order is alphabetic (nlohmann objects
  // are sorted), so the dump is reproducible. Input/output paths are
  // excluded: they do not determine the produced rows.
  json effective;
  effective["experiment"] = to_string(config.experiment);
  effective["cardinality"] = config.cardinality;
  effective["cardinality_min"] = config.cardinality_min;
  effective["cardinality_max"] = config.cardinality_max;
  effective["temperature"] = config.temperature;
  effective["temperature_grid"] = config.temperature_grid;
  effective["dimension"] = config.dimension;
  effective["epsilon"] = config.epsilon;
  effective["rule"] = config.rule;
  effective["steps"] = config.steps;
  effective["burn_in"] = config.burn_in;
  effective["thin"] = config.thin;
  if (config.seed) effective["seed"] = *config.seed;
  effective["max_cardinality"] = config.max_cardinality;
  if (config.lambda) effective["lambda"] = *config.lambda;
  effective["exactbd_min"] = config.exactbd_min;
  effective["exactbd_max"] = config.exactbd_max;
  json strategies = json::array();
  for (const auto& s : config.strategies) strategies.push_back(strategy_to_json(s));
  effective["strategies"] = strategies;
  config.canonical_text = effective.dump();
  config.config_hash = fnv1a(config.canonical_text);
  return config;
}

}  // namespace causetq
