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

// Teacher-student protocol: randomly initialized teachers label a grid, students
// are trained on those labels, and metrics are averaged over teacher seeds.

#include "qpercept/circuits.hpp"
#include "qpercept/dataset.hpp"
#include "qpercept/metrics.hpp"
#include "qpercept/training.hpp"

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace qpercept {

/// Labels `grid` with the teacher at parameters drawn from init_params(seed).
LabeledGrid generate_dataset(const ArchitectureId& teacher, std::span<const Point> grid,
                             std::uint64_t seed, double init_scale = 2 * std::numbers::pi);

/// Labels `grid` with the teacher at explicit parameters.
LabeledGrid label_grid(const ArchitectureId& teacher, std::span<const Point> grid,
                       std::vector<double> params, std::uint64_t seed = 0);

struct ExperimentOptions {
    int n_seeds = 10;
    int resolution = 21;
    int map_resolution = 51;
    double lo = -std::numbers::pi;
    double hi = std::numbers::pi;
    /// Also train every student on the binary labels and report accuracy.
    bool binary = true;
    /// Worker threads used to fan out seeds; results do not depend on it.
    int threads = 1;
    /// train.seed is the base seed every teacher and student stream derives from.
    TrainConfig train;
};

struct StudentResult {
    ArchitectureId architecture;
    std::vector<TrainRun> runs;        // continuous labels, one per seed
    std::vector<TrainRun> binary_runs; // empty unless options.binary
    std::vector<PredictionMap> maps;   // from the continuous-label run
    std::vector<double> relative_entropy;
    std::vector<double> accuracy; // final accuracy of the binary-label run

    std::vector<double> mean_loss_curve;
    std::vector<double> mean_accuracy_curve;
    double mean_final_loss = 0.0;
    double mean_relative_entropy = 0.0;
    double mean_accuracy = 0.0;
};

struct ExperimentResult {
    ArchitectureId teacher;
    int n_seeds = 0;
    ExperimentOptions options;
    std::vector<std::uint64_t> teacher_seeds;
    std::vector<std::vector<double>> teacher_params;
    std::vector<PredictionMap> teacher_maps;
    std::vector<StudentResult> students;

    const StudentResult& student(const ArchitectureId& arch) const;
};

/// Seed used for the teacher of seed index `s`.
std::uint64_t teacher_seed(std::uint64_t base, int s);

ExperimentResult run_experiment(const ArchitectureId& teacher, std::span<const ArchitectureId> students,
                                const ExperimentOptions& options);

/// Element-wise mean of equally long series.
std::vector<double> mean_curve(const std::vector<std::vector<double>>& curves);

} // namespace qpercept
