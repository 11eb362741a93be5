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

#include "qpercept/io.hpp"

#include "qpercept/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qpercept {

using nlohmann::json;

namespace {

std::vector<std::string> split(std::string_view line)
{
    std::vector<std::string> out;
    while (true) {
        const auto comma = line.find(',');
        out.emplace_back(line.substr(0, comma));
        if (comma == std::string_view::npos) {
            return out;
        }
        line = line.substr(comma + 1);
    }
}

double parse_number(const std::string& s)
{
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("malformed number '" + s + "' in CSV");
    }
    return v;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            out.push_back(line);
        }
    }
    return out;
}

} // namespace

std::string to_csv(const CsvTable& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out += (i ? "," : "") + table.header[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw StructuralError("CSV row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + format_double(row[i]);
        }
        out += "\n";
    }
    return out;
}

CsvTable parse_csv(const std::string& text)
{
    const auto lines = lines_of(text);
    if (lines.empty()) {
        throw ParseError("CSV has no header");
    }
    CsvTable table;
    table.header = split(lines.front());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i]);
        if (cells.size() != table.header.size()) {
            throw ParseError("CSV line " + std::to_string(i + 1) + " is not rectangular");
        }
        std::vector<double> row;
        for (const auto& c : cells) {
            row.push_back(parse_number(c));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string map_to_csv(const PredictionMap& map)
{
    const auto grid = make_grid(map.resolution, map.lo, map.hi);
    const auto n = static_cast<std::size_t>(map.resolution);
    CsvTable t;
    t.header.push_back("x1\\x2");
    for (std::size_t j = 0; j < n; ++j) {
        t.header.push_back(format_double(grid[j][1]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row{grid[i * n][0]};
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(map.values[i * n + j]);
        }
        t.rows.push_back(std::move(row));
    }
    return to_csv(t);
}

PredictionMap map_from_csv(const std::string& text)
{
    const auto t = parse_csv(text);
    const auto n = t.header.size() - 1;
    if (n < 2 || t.rows.size() != n) {
        throw ParseError("prediction map CSV must be square with at least two columns");
    }
    PredictionMap map;
    map.resolution = static_cast<int>(n);
    map.lo = parse_number(t.header[1]);
    map.hi = parse_number(t.header.back());
    for (const auto& row : t.rows) {
        map.values.insert(map.values.end(), row.begin() + 1, row.end());
    }
    return map;
}

CsvTable curve_table(const TrainRun& run)
{
    CsvTable t;
    t.header = {"epoch", "loss"};
    const bool with_accuracy = !run.accuracy_curve.empty();
    if (with_accuracy) {
        t.header.push_back("accuracy");
    }
    for (std::size_t e = 0; e < run.loss_curve.size(); ++e) {
        std::vector<double> row{static_cast<double>(e), run.loss_curve[e]};
        if (with_accuracy) {
            row.push_back(run.accuracy_curve[e]);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

json to_json(const TrainConfig& cfg)
{
    return {{"learning_rate", cfg.learning_rate},
            {"epochs", cfg.epochs},
            {"optimizer", optimizer_name(cfg.optimizer)},
            {"seed", cfg.seed},
            {"init_scale", cfg.init_scale}};
}

json to_json(const TrainRun& run)
{
    return {{"architecture", run.architecture.name()},
            {"label_kind", run.label_kind == LabelKind::Binary ? "binary" : "continuous"},
            {"config", to_json(run.config)},
            {"final_loss", run.final_loss},
            {"final_accuracy", run.final_accuracy},
            {"final_params", run.final_params}};
}

json summary_json(const ExperimentResult& result)
{
    json students = json::array();
    for (const auto& s : result.students) {
        std::vector<double> final_losses;
        for (const auto& r : s.runs) {
            final_losses.push_back(r.final_loss);
        }
        json entry{{"architecture", s.architecture.name()},
                   {"mean_final_loss", s.mean_final_loss},
                   {"mean_relative_entropy", s.mean_relative_entropy},
                   {"final_loss", final_losses},
                   {"relative_entropy", s.relative_entropy},
                   {"mean_loss_curve", s.mean_loss_curve}};
        if (result.options.binary) {
            entry["mean_accuracy"] = s.mean_accuracy;
            entry["accuracy"] = s.accuracy;
            entry["mean_accuracy_curve"] = s.mean_accuracy_curve;
        }
        students.push_back(std::move(entry));
    }
    const auto& o = result.options;
    return {{"experiment", "teacher_student"},
            {"teacher", result.teacher.name()},
            {"n_seeds", result.n_seeds},
            {"teacher_seeds", result.teacher_seeds},
            {"grid", {{"resolution", o.resolution}, {"map_resolution", o.map_resolution}, {"lo", o.lo}, {"hi", o.hi}}},
            {"train", to_json(o.train)},
            {"students", std::move(students)}};
}

json summary_json(const EncodingStudy& study, const CircularDataset& data)
{
    auto projection = [](const PcaProjection& p, double score) {
        return json{{"separability_score", score},
                    {"explained_variance", p.explained_variance},
                    {"components", p.components},
                    {"mean", p.mean}};
    };
    return {{"experiment", "encoding_pca"},
            {"n_points", data.points.size()},
            {"radius", data.radius},
            {"rx", projection(study.rx, study.rx_score)},
            {"rot", projection(study.roth, study.roth_score)},
            {"separability_gap", study.rx_score - study.roth_score}};
}

json summary_json(const LabellingReport& report)
{
    auto entry = [](const LabellingCase& c) {
        return json{{"final_loss", c.final_loss},
                    {"accuracy", c.accuracy},
                    {"minus_class_probability", c.minus_class_probability},
                    {"run", to_json(c.run)}};
    };
    return {{"experiment", "labelling"},
            {"n_points", report.data.points.size()},
            {"radius", report.data.radius},
            {"cases",
             {{report.inner_negative.name, entry(report.inner_negative)},
              {report.flipped.name, entry(report.flipped)},
              {report.flipped_with_x.name, entry(report.flipped_with_x)}}}};
}

json summary_json(const NormalizationReport& report)
{
    return {{"experiment", "normalization"},
            {"pi_range", summary_json(report.full_range)},
            {"unit_range", summary_json(report.unit_range)},
            {"pi_range_gap", report.full_gap},
            {"unit_range_gap", report.unit_gap},
            {"gap_ratio", report.gap_ratio}};
}

CsvTable projection_table(const PcaProjection& projection, std::span<const double> labels)
{
    if (labels.size() != projection.projected.size()) {
        throw StructuralError("projection and labels differ in length");
    }
    CsvTable t;
    t.header = {"point", "projection_1", "projection_2", "label"};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        t.rows.push_back({static_cast<double>(i), projection.projected[i][0], projection.projected[i][1], labels[i]});
    }
    return t;
}

std::string file_stem(const ArchitectureId& arch)
{
    auto name = arch.name();
    for (auto& ch : name) {
        if (ch == ':' || ch == '@') {
            ch = '-';
        }
    }
    return name;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

} // namespace qpercept
