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

#include <cstdint>
#include <span>
#include <vector>

namespace qpercept {

enum class LabelKind { Continuous, Binary };

/// resolution^2 points, x1-major: index i * resolution + j holds (g[i], g[j]) where g is the
/// evenly spaced axis from lo to hi inclusive. Throws ConfigurationError if resolution < 2.
std::vector<Point> make_grid(int resolution, double lo, double hi);

/// sign(y) with sign(0) = +1.
inline double binarize(double y) { return y < 0.0 ? -1.0 : 1.0; }

/// Inputs labelled by a teacher circuit; y_binary[i] == binarize(y_continuous[i]).
struct LabeledGrid {
    std::vector<Point> points;
    std::vector<double> y_continuous;
    std::vector<double> y_binary;
    ArchitectureId teacher;
    std::vector<double> teacher_params;
    std::uint64_t teacher_seed = 0;

    std::size_t size() const { return points.size(); }

    std::span<const double> labels(LabelKind kind) const
    {
        return kind == LabelKind::Continuous ? std::span<const double>(y_continuous)
                                             : std::span<const double>(y_binary);
    }
};

} // namespace qpercept
