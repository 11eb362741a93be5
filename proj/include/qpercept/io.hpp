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

// Artifact serialization: CSV tables, prediction maps and JSON summaries.
// Doubles are written as the shortest text that round-trips exactly.

#include "qpercept/analysis.hpp"
#include "qpercept/config.hpp"
#include "qpercept/metrics.hpp"
#include "qpercept/teacher_student.hpp"
#include "qpercept/training.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace qpercept {

/// Rectangular table with a header row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

/// Header row "x1\x2,<x2 axis values>", then one row per x1 value: "<x1>,<values...>".
std::string map_to_csv(const PredictionMap& map);
PredictionMap map_from_csv(const std::string& text);

/// epoch,loss[,accuracy]
CsvTable curve_table(const TrainRun& run);

nlohmann::json to_json(const TrainConfig& cfg);
nlohmann::json to_json(const TrainRun& run);
nlohmann::json summary_json(const ExperimentResult& result);
nlohmann::json summary_json(const EncodingStudy& study, const CircularDataset& data);
nlohmann::json summary_json(const LabellingReport& report);
nlohmann::json summary_json(const NormalizationReport& report);

/// point,projection_1,projection_2,label
CsvTable projection_table(const PcaProjection& projection, std::span<const double> labels);

/// Architecture name made safe for file names ("reuploading:2" -> "reuploading-2").
std::string file_stem(const ArchitectureId& arch);

/// Writes `text` to `path`; throws std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace qpercept
