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

#include <iosfwd>

#include "causetq/config.hpp"

namespace causetq {

inline constexpr const char* kVersion = "0.1.0";

// Worker-count override is read from this environment variable (the only
// setting controlled by the environment).
inline constexpr const char* kWorkersEnvVar = "CAUSETQ_WORKERS";

// Runs the configured experiment and writes its CSV artifacts. Returns the
// process exit status: 0 on success, 3 on verification failure. Validation
// and resource-cap problems are thrown (ConfigError, ResourceLimitError).
int run_experiment(const ExperimentConfig& config);

}  // namespace causetq
