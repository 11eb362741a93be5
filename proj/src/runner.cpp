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

#include "qpercept/runner.hpp"

#include "qpercept/io.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <system_error>

namespace qpercept {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void require_finite(const json& j, const std::string& path)
{
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        throw std::runtime_error("metric " + path + " is not finite");
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            require_finite(value, path + "." + key);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            require_finite(j[i], path + "[" + std::to_string(i) + "]");
        }
    }
}

void write_summary(const fs::path& dir, json summary, const ExperimentConfig& config)
{
    require_finite(summary, "summary");
    summary["status"] = "complete";
    summary["config"] = print_config(config);
    write_text(dir / "summary.json", summary.dump(2) + "\n");
}

void write_teacher_student(const fs::path& dir, const ExperimentResult& result)
{
    for (int s = 0; s < result.n_seeds; ++s) {
        const auto idx = static_cast<std::size_t>(s);
        const auto seed = std::to_string(s);
        write_text(dir / ("map_teacher_" + seed + ".csv"), map_to_csv(result.teacher_maps[idx]));
        for (const auto& st : result.students) {
            const auto stem = file_stem(st.architecture);
            write_text(dir / ("loss_" + stem + "_" + seed + ".csv"), to_csv(curve_table(st.runs[idx])));
            write_text(dir / ("map_" + stem + "_" + seed + ".csv"), map_to_csv(st.maps[idx]));
            write_text(dir / ("run_" + stem + "_" + seed + ".json"), to_json(st.runs[idx]).dump(2) + "\n");
            if (!st.binary_runs.empty()) {
                write_text(dir / ("accuracy_" + stem + "_" + seed + ".csv"),
                           to_csv(curve_table(st.binary_runs[idx])));
            }
        }
    }
}

void prepare(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string());
    }
}

} // namespace

void run_experiment_config(const ExperimentConfig& config)
{
    const fs::path dir(config.output);
    prepare(dir);
    switch (config.kind) {
    case ExperimentKind::TeacherStudent: {
        const auto result = run_experiment(config.teacher, config.students, config.experiment_options());
        auto summary = summary_json(result);
        write_teacher_student(dir, result);
        write_summary(dir, std::move(summary), config);
        break;
    }
    case ExperimentKind::EncodingPca: {
        const auto data = circular_dataset(config.n_points, config.radius, config.data_seed);
        const auto study = encoding_study(data);
        write_text(dir / "projection_rx.csv", to_csv(projection_table(study.rx, data.labels)));
        write_text(dir / "projection_rot.csv", to_csv(projection_table(study.roth, data.labels)));
        write_summary(dir, summary_json(study, data), config);
        break;
    }
    case ExperimentKind::Labelling: {
        const auto report = labelling_experiment(config.train, config.n_points, config.radius, config.data_seed);
        for (const auto* c : {&report.inner_negative, &report.flipped, &report.flipped_with_x}) {
            write_text(dir / ("accuracy_" + c->name + ".csv"), to_csv(curve_table(c->run)));
            CsvTable t;
            t.header = {"x1", "x2", "label", "prediction"};
            const auto& labels = c == &report.inner_negative ? report.data.labels : flip_labels(report.data).labels;
            for (std::size_t k = 0; k < report.data.points.size(); ++k) {
                t.rows.push_back({report.data.points[k][0], report.data.points[k][1], labels[k], c->predictions[k]});
            }
            write_text(dir / ("predictions_" + c->name + ".csv"), to_csv(t));
        }
        write_summary(dir, summary_json(report), config);
        break;
    }
    case ExperimentKind::Normalization: {
        const auto report = normalization_experiment(config.experiment_options());
        prepare(dir / "pi_range");
        prepare(dir / "unit_range");
        write_teacher_student(dir / "pi_range", report.full_range);
        write_teacher_student(dir / "unit_range", report.unit_range);
        write_summary(dir, summary_json(report), config);
        break;
    }
    }
}

int run(const ExperimentConfig& config, std::ostream& err)
{
    try {
        run_experiment_config(config);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        try {
            const fs::path dir(config.output);
            if (fs::is_directory(dir)) {
                const json failed{{"status", "failed"}, {"error", e.what()}, {"config", print_config(config)}};
                write_text(dir / "summary.json", failed.dump(2) + "\n");
            }
        } catch (const std::exception&) {
            // Nothing more can be recorded.
        }
        return 1;
    }
}

} // namespace qpercept
