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

#include "qpercept/teacher_student.hpp"

#include "parallel.hpp"
#include "qpercept/errors.hpp"

#include <cmath>
#include <numeric>

namespace qpercept {

LabeledGrid label_grid(const ArchitectureId& teacher, std::span<const Point> grid,
                       std::vector<double> params, std::uint64_t seed)
{
    const auto circuit = build(teacher);
    LabeledGrid data;
    data.points.assign(grid.begin(), grid.end());
    data.y_continuous = predict(circuit, params, grid);
    data.y_binary.reserve(data.y_continuous.size());
    for (double y : data.y_continuous) {
        data.y_binary.push_back(binarize(y));
    }
    data.teacher = teacher;
    data.teacher_params = std::move(params);
    data.teacher_seed = seed;
    return data;
}

LabeledGrid generate_dataset(const ArchitectureId& teacher, std::span<const Point> grid,
                             std::uint64_t seed, double init_scale)
{
    const auto circuit = build(teacher);
    return label_grid(teacher, grid, init_params(circuit.n_params(), init_scale, seed), seed);
}

std::uint64_t teacher_seed(std::uint64_t base, int s)
{
    return derive_seed(base, {static_cast<std::uint64_t>(s), 0});
}

const StudentResult& ExperimentResult::student(const ArchitectureId& arch) const
{
    for (const auto& s : students) {
        if (s.architecture == arch) {
            return s;
        }
    }
    throw ConfigurationError("no student '" + arch.name() + "' in experiment");
}

std::vector<double> mean_curve(const std::vector<std::vector<double>>& curves)
{
    if (curves.empty()) {
        return {};
    }
    std::vector<double> out(curves.front().size(), 0.0);
    for (const auto& c : curves) {
        if (c.size() != out.size()) {
            throw StructuralError("mean_curve: series have different lengths");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            out[i] += c[i];
        }
    }
    for (auto& v : out) {
        v /= static_cast<double>(curves.size());
    }
    return out;
}

namespace {

double mean(const std::vector<double>& v)
{
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

struct SeedOutcome {
    std::vector<double> teacher_params;
    PredictionMap teacher_map;
    std::vector<TrainRun> runs;
    std::vector<TrainRun> binary_runs;
    std::vector<PredictionMap> maps;
};

} // namespace

ExperimentResult run_experiment(const ArchitectureId& teacher, std::span<const ArchitectureId> students,
                                const ExperimentOptions& options)
{
    if (options.n_seeds < 1) {
        throw ConfigurationError("n_seeds must be at least 1");
    }
    if (options.map_resolution < 2) {
        throw ConfigurationError("map resolution must be at least 2");
    }
    options.train.validate();
    const auto grid = make_grid(options.resolution, options.lo, options.hi);
    const auto base = options.train.seed;
    const auto teacher_circuit = build(teacher);
    std::vector<CircuitSpec> student_circuits;
    for (const auto& s : students) {
        student_circuits.push_back(build(s));
    }

    std::vector<SeedOutcome> outcomes(static_cast<std::size_t>(options.n_seeds));
    detail::parallel_for(outcomes.size(), options.threads, [&](std::size_t s) {
        auto& out = outcomes[s];
        const auto tseed = teacher_seed(base, static_cast<int>(s));
        const auto data = generate_dataset(teacher, grid, tseed, options.train.init_scale);
        out.teacher_params = data.teacher_params;
        out.teacher_map = prediction_map(teacher_circuit, data.teacher_params, options.map_resolution,
                                         options.lo, options.hi);
        for (std::size_t i = 0; i < students.size(); ++i) {
            auto cfg = options.train;
            cfg.seed = derive_seed(base, {s, 1 + i, 0});
            auto run = train(student_circuits[i], data, cfg, LabelKind::Continuous);
            run.architecture = students[i];
            out.maps.push_back(prediction_map(student_circuits[i], run.final_params,
                                              options.map_resolution, options.lo, options.hi));
            out.runs.push_back(std::move(run));
            if (options.binary) {
                cfg.seed = derive_seed(base, {s, 1 + i, 1});
                auto brun = train(student_circuits[i], data, cfg, LabelKind::Binary);
                brun.architecture = students[i];
                out.binary_runs.push_back(std::move(brun));
            }
        }
    });

    ExperimentResult result;
    result.teacher = teacher;
    result.n_seeds = options.n_seeds;
    result.options = options;
    for (int s = 0; s < options.n_seeds; ++s) {
        auto& out = outcomes[static_cast<std::size_t>(s)];
        result.teacher_seeds.push_back(teacher_seed(base, s));
        result.teacher_params.push_back(std::move(out.teacher_params));
        result.teacher_maps.push_back(std::move(out.teacher_map));
    }
    for (std::size_t i = 0; i < students.size(); ++i) {
        StudentResult sr;
        sr.architecture = students[i];
        std::vector<std::vector<double>> loss_curves;
        std::vector<std::vector<double>> accuracy_curves;
        std::vector<double> final_losses;
        for (std::size_t s = 0; s < outcomes.size(); ++s) {
            auto& out = outcomes[s];
            sr.relative_entropy.push_back(relative_entropy(result.teacher_maps[s], out.maps[i]));
            loss_curves.push_back(out.runs[i].loss_curve);
            final_losses.push_back(out.runs[i].final_loss);
            sr.runs.push_back(std::move(out.runs[i]));
            sr.maps.push_back(std::move(out.maps[i]));
            if (options.binary) {
                accuracy_curves.push_back(out.binary_runs[i].accuracy_curve);
                sr.accuracy.push_back(out.binary_runs[i].final_accuracy);
                sr.binary_runs.push_back(std::move(out.binary_runs[i]));
            }
        }
        sr.mean_loss_curve = mean_curve(loss_curves);
        sr.mean_accuracy_curve = mean_curve(accuracy_curves);
        sr.mean_final_loss = mean(final_losses);
        sr.mean_relative_entropy = mean(sr.relative_entropy);
        sr.mean_accuracy = mean(sr.accuracy);
        for (double v : sr.relative_entropy) {
            if (!std::isfinite(v)) {
                throw TrainingDivergedError("relative entropy is non-finite for " + sr.architecture.name());
            }
        }
        result.students.push_back(std::move(sr));
    }
    return result;
}

} // namespace qpercept
