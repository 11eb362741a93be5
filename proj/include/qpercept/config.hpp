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

// Experiment configuration files.
//
// Grammar, one entry per line:
//
//   line    := blank | comment | entry
//   comment := '#' anything
//   entry   := key '=' value
//
// Keys and values are trimmed; each key may appear at most once. Lists are
// comma separated. Recognized keys and defaults:
//
//   experiment     teacher_student | encoding_pca | labelling | normalization
//                  (default teacher_student)
//   teacher        architecture name, required for teacher_student
//   students       comma-separated architecture names, required for teacher_student
//   n_seeds        10         resolution   21         map_resolution  51
//   lo / hi        -pi / pi   binary       true
//   learning_rate  0.05       epochs       150        optimizer       adam | gd
//   seed           0          init_scale   2 pi       threads         1
//   n_points       500        radius       pi/sqrt(2) data_seed       0
//   output         out
//
// Architecture names: dissipative_qp, reuploading:<layers>, deep_teacher4,
// eight_gate_qp, deep_dissipative_qp, qnn_two_qp, random_deep_qp, each optionally
// followed by "@roth" for the Rot-H encoding.

#include "qpercept/analysis.hpp"
#include "qpercept/circuits.hpp"
#include "qpercept/teacher_student.hpp"
#include "qpercept/training.hpp"

#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace qpercept {

enum class ExperimentKind { TeacherStudent, EncodingPca, Labelling, Normalization };

std::string_view experiment_kind_name(ExperimentKind kind);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::TeacherStudent;
    ArchitectureId teacher;
    std::vector<ArchitectureId> students;
    int n_seeds = 10;
    int resolution = 21;
    int map_resolution = 51;
    double lo = -std::numbers::pi;
    double hi = std::numbers::pi;
    bool binary = true;
    TrainConfig train;
    int threads = 1;
    int n_points = 500;
    double radius = kDefaultCircleRadius;
    std::uint64_t data_seed = 0;
    std::string output = "out";

    ExperimentOptions experiment_options() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ParseError naming the offending line and key.
ExperimentConfig parse_config(std::string_view text);

/// Prints every key; parse_config(print_config(c)) == c.
std::string print_config(const ExperimentConfig& config);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

} // namespace qpercept
