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

#include "qpercept/metrics.hpp"

#include "qpercept/dataset.hpp"
#include "qpercept/errors.hpp"
#include "qpercept/training.hpp"

#include <cmath>

namespace qpercept {

PredictionMap prediction_map(const CircuitSpec& circuit, std::span<const double> w, int resolution,
                             double lo, double hi)
{
    const auto grid = make_grid(resolution, lo, hi);
    return {resolution, lo, hi, predict(circuit, w, grid)};
}

std::vector<double> normalize_to_distribution(std::span<const double> values)
{
    std::vector<double> p(values.size());
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        p[i] = values[i] + 1.0 + kDistributionFloor;
        total += p[i];
    }
    for (auto& v : p) {
        v /= total;
    }
    return p;
}

std::vector<double> normalize_to_distribution(const PredictionMap& map)
{
    return normalize_to_distribution(map.values);
}

double kl_divergence(std::span<const double> p, std::span<const double> q)
{
    if (p.size() != q.size()) {
        throw StructuralError("relative entropy: distributions have different lengths");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            s += p[i] * std::log(p[i] / q[i]);
        }
    }
    return s;
}

double relative_entropy(const PredictionMap& teacher, const PredictionMap& student)
{
    if (!teacher.same_grid(student)) {
        throw StructuralError("relative entropy: prediction maps are on different grids");
    }
    return kl_divergence(normalize_to_distribution(teacher), normalize_to_distribution(student));
}

double accuracy(std::span<const double> predictions, std::span<const double> labels)
{
    if (predictions.size() != labels.size()) {
        throw StructuralError("accuracy: predictions and labels differ in length");
    }
    if (predictions.empty()) {
        return 0.0;
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        correct += binarize(predictions[i]) == labels[i] ? 1 : 0;
    }
    return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

} // namespace qpercept
