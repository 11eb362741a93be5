// Copyright 2026 The qpercept Authors
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

#include "qpercept/config.hpp"

#include <filesystem>
#include <ostream>

namespace qpercept {

/// Runs the configured experiment and writes its artifacts into config.output.
/// Throws on any failure, including non-finite metrics.
void run_experiment_config(const ExperimentConfig& config);

/// run_experiment_config() with error reporting: returns 0 on success, 1 otherwise.
/// On failure a summary.json with "status": "failed" marks the directory as partial.
int run(const ExperimentConfig& config, std::ostream& err);

} // namespace qpercept
