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

#include "qpercept/circuits.hpp"

#include <span>
#include <vector>

namespace qpercept {

/// Offset added to every shifted map value before renormalization.
inline constexpr double kDistributionFloor = 1e-9;

/// Model outputs on a square grid; values use the make_grid() ordering.
struct PredictionMap {
    int resolution = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> values;

    double at(int i, int j) const
    {
        return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(resolution) +
                      static_cast<std::size_t>(j)];
    }

    bool same_grid(const PredictionMap& other) const
    {
        return resolution == other.resolution && lo == other.lo && hi == other.hi &&
               values.size() == other.values.size();
    }
};

PredictionMap prediction_map(const CircuitSpec& circuit, std::span<const double> w, int resolution,
                             double lo, double hi);

/// p_i = (y_i + 1 + eps) / sum_j (y_j + 1 + eps).
std::vector<double> normalize_to_distribution(std::span<const double> values);
std::vector<double> normalize_to_distribution(const PredictionMap& map);

/// S(P || Q) = sum p ln(p / q) for two distributions of equal length.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// S(P || Q) with P the normalized teacher map and Q the normalized student map.
/// Throws StructuralError if the grids differ.
double relative_entropy(const PredictionMap& teacher, const PredictionMap& student);

/// Fraction of entries with binarize(prediction) == label.
double accuracy(std::span<const double> predictions, std::span<const double> labels);

} // namespace qpercept
