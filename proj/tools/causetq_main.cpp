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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "causetq/errors.hpp"
#include "causetq/experiments.hpp"

namespace {

using nlohmann::json;

// flag values; only flags the user actually passed override the config file
struct FlagOverrides {
  std::string config_path;
  int cardinality = 0;
  int cardinality_min = 0;
  int cardinality_max = 0;
  double temperature = 0.0;
  std::string temperature_grid;
  int dimension = 0;
  double epsilon = 0.0;
  std::string rule;
  long long steps = 0;
  long long burn_in = 0;
  long long thin = 0;
  std::uint64_t seed = 0;
  std::string strategies;
  int max_cardinality = 0;
  double lambda = 0.0;
  int exactbd_min = 0;
  int exactbd_max = 0;
  std::string input;
  std::string output;
  int workers = 0;
};

void add_common_options(CLI::App* cmd, FlagOverrides& flags) {
  cmd->add_option("--config", flags.config_path, "JSON configuration file");
  cmd->add_option("--n", flags.cardinality, "cardinality N");
  cmd->add_option("--n-min", flags.cardinality_min, "smallest N of a sweep");
  cmd->add_option("--n-max", flags.cardinality_max, "largest N of a sweep");
  cmd->add_option("--temperature", flags.temperature, "temperature T = 1/beta");
  cmd->add_option("--t-grid", flags.temperature_grid, "comma-separated temperature grid");
  cmd->add_option("--dimension", flags.dimension, "spacetime dimension of the action");
  cmd->add_option("--epsilon", flags.epsilon, "smearing parameter");
  cmd->add_option("--rule", flags.rule, "acceptance rule: uniform | metropolis");
  cmd->add_option("--steps", flags.steps, "chain length");
  cmd->add_option("--burn-in", flags.burn_in, "burn-in steps (default steps/10)");
  cmd->add_option("--thin", flags.thin, "thinning interval");
  cmd->add_option("--seed", flags.seed, "root RNG seed");
  cmd->add_option("--strategies", flags.strategies,
                  "comma-separated strategy kinds (quantum,classical-mixed,link,relation)");
  cmd->add_option("--max-cardinality", flags.max_cardinality, "enumeration cap");
  cmd->add_option("--lambda", flags.lambda, "penalty weight of the exact encoding");
  cmd->add_option("--exactbd-min", flags.exactbd_min, "smallest N to verify");
  cmd->add_option("--exactbd-max", flags.exactbd_max, "largest N to verify");
  cmd->add_option("--input", flags.input, "input path, - for stdin");
  cmd->add_option("--output", flags.output, "output path, - for stdout");
  cmd->add_option("--workers", flags.workers, "worker threads");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

json merged_config(const CLI::App* cmd, const FlagOverrides& flags, const std::string& kind) {
  json root = json::object();
  if (!flags.config_path.empty()) {
    std::ifstream file(flags.config_path);
    if (!file) {
      throw causetq::ConfigError("cannot open config file \"" + flags.config_path + "\"");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
      root = json::parse(buffer.str());
    } catch (const json::exception& e) {
      throw causetq::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw causetq::ConfigError("config must be a JSON object");
  }
  root["experiment"] = kind;

  auto passed = [&](const std::string& name) { return cmd->count(name) > 0; };
  if (passed("--n")) root["cardinality"] = flags.cardinality;
  if (passed("--n-min")) root["cardinality_min"] = flags.cardinality_min;
  if (passed("--n-max")) root["cardinality_max"] = flags.cardinality_max;
  if (passed("--temperature")) root["temperature"] = flags.temperature;
  if (passed("--t-grid")) {
    json grid = json::array();
    for (const auto& part : split_csv(flags.temperature_grid)) grid.push_back(std::stod(part));
    root["temperature_grid"] = grid;
  }
  if (passed("--dimension")) root["dimension"] = flags.dimension;
  if (passed("--epsilon")) root["epsilon"] = flags.epsilon;
  if (passed("--rule")) root["rule"] = flags.rule;
  if (passed("--steps")) root["steps"] = flags.steps;
  if (passed("--burn-in")) root["burn_in"] = flags.burn_in;
  if (passed("--thin")) root["thin"] = flags.thin;
  if (passed("--seed")) root["seed"] = flags.seed;
  if (passed("--strategies")) {
    json list = json::array();
    for (const auto& kind_name : split_csv(flags.strategies)) {
      list.push_back(json{{"kind", kind_name}});
    }
    root["strategies"] = list;
  }
  if (passed("--max-cardinality")) root["max_cardinality"] = flags.max_cardinality;
  if (passed("--lambda")) root["lambda"] = flags.lambda;
  if (passed("--exactbd-min")) root["exactbd_min"] = flags.exactbd_min;
  if (passed("--exactbd-max")) root["exactbd_max"] = flags.exactbd_max;
  if (passed("--input")) root["input"] = flags.input;
  if (passed("--output")) root["output"] = flags.output;
  if (passed("--workers")) root["workers"] = flags.workers;
  return root;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"causetq: causal-set sampling experiments"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"enumerate",   "action", "sample", "spectral-gap",
                                          "sweep-N",     "sweep-T", "exactbd-verify"};
  std::map<std::string, FlagOverrides> flags;
  std::map<std::string, CLI::App*> commands;
  for (const auto& kind : kinds) {
    CLI::App* cmd = app.add_subcommand(kind, kind + " experiment");
    add_common_options(cmd, flags[kind]);
    commands[kind] = cmd;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& kind : kinds) {
      if (!commands[kind]->parsed()) continue;
      json merged = merged_config(commands[kind], flags[kind], kind);
      causetq::ExperimentConfig config = causetq::validate_config(merged.dump());
      return causetq::run_experiment(config);
    }
  } catch (const causetq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const causetq::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const causetq::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
