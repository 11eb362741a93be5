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

// Encoding study (probability vectors + PCA on circular data) and the
// labelling / input-range experiments.

#include "qpercept/circuits.hpp"
#include "qpercept/teacher_student.hpp"
#include "qpercept/training.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace qpercept {

/// Circle of radius pi / sqrt(2), enclosing roughly 39% of [-pi, pi]^2.
inline const double kDefaultCircleRadius = std::numbers::pi / std::numbers::sqrt2;

using Row4 = std::array<double, 4>;
using Row2 = std::array<double, 2>;

/// Points uniformly sampled in [-pi, pi]^2, labelled -1 inside the centered circle and +1 outside.
struct CircularDataset {
    std::vector<Point> points;
    std::vector<double> labels;
    double radius = kDefaultCircleRadius;
};

double circle_label(const Point& x, double radius);

CircularDataset circular_dataset(int n, double radius, std::uint64_t seed);

/// Same points with every label negated.
CircularDataset flip_labels(CircularDataset data);

/// [p00, p01, p10, p11] of the two data qubits after the encoding gates alone.
Row4 encoding_probabilities(Encoding encoding, const Point& x);
std::vector<Row4> encoding_probability_vectors(Encoding encoding, std::span<const Point> points);

struct PcaProjection {
    std::array<Row4, 2> components{}; // orthonormal, leading component first
    Row4 mean{};
    std::vector<Row2> projected;
    std::array<double, 2> explained_variance{}; // non-increasing, >= 0
};

/// Projects mean-centered rows onto the top two eigenvectors of their covariance
/// (normalized by n - 1). Throws ConfigurationError for fewer than three rows.
PcaProjection pca_2d(std::span<const Row4> rows);

/// 4x4 sample covariance used by pca_2d.
std::array<Row4, 4> covariance_4(std::span<const Row4> rows);

/// Best accuracy of a linear threshold classifier on the 2-D points, searched over
/// 720 directions and every threshold; in [0.5, 1].
double separability_score(std::span<const Row2> points, std::span<const double> labels);
double separability_score(const PcaProjection& projection, std::span<const double> labels);

struct EncodingStudy {
    std::vector<Row4> rx_probabilities;
    std::vector<Row4> roth_probabilities;
    PcaProjection rx;
    PcaProjection roth;
    double rx_score = 0.0;
    double roth_score = 0.0;
};

EncodingStudy encoding_study(const CircularDataset& data);

struct LabellingCase {
    std::string name;
    TrainRun run;
    std::vector<double> predictions;
    double final_loss = 0.0;
    double accuracy = 0.0;
    /// Mean [alpha^2, beta^2] of the readout qubit over the -1 labelled points.
    std::array<double, 2> minus_class_probability{};
};

struct LabellingReport {
    CircularDataset data;
    LabellingCase inner_negative; // inner -1, outer +1
    LabellingCase flipped;        // inner +1, outer -1
    LabellingCase flipped_with_x; // flipped labels, X before readout
};

/// Trains the dissipative perceptron on circular data under the three labellings.
/// Every case starts from the same initial parameters (cfg.seed).
LabellingReport labelling_experiment(const TrainConfig& cfg, int n_points = 500,
                                     double radius = kDefaultCircleRadius, std::uint64_t data_seed = 0);

struct NormalizationReport {
    ExperimentResult full_range; // inputs in [-pi, pi]
    ExperimentResult unit_range; // inputs in [-1, 1]
    double full_gap = 0.0;       // mean final loss: dissipative QP minus reuploading:2
    double unit_gap = 0.0;
    double gap_ratio = 0.0; // |unit_gap| / |full_gap|
};

/// Deep-teacher experiment with both students, once on [-pi, pi] and once on [-1, 1].
/// `options.lo` / `options.hi` are ignored.
NormalizationReport normalization_experiment(const ExperimentOptions& options);

} // namespace qpercept
