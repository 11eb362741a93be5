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

#include "qpercept/dataset.hpp"

#include "qpercept/errors.hpp"

namespace qpercept {

std::vector<Point> make_grid(int resolution, double lo, double hi)
{
    if (resolution < 2) {
        throw ConfigurationError("grid resolution must be at least 2");
    }
    std::vector<double> axis(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        // Endpoints are hit exactly.
        axis[static_cast<std::size_t>(i)] =
            i == resolution - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (resolution - 1);
    }
    std::vector<Point> points;
    points.reserve(axis.size() * axis.size());
    for (double a : axis) {
        for (double b : axis) {
            points.push_back({a, b});
        }
    }
    return points;
}

} // namespace qpercept
