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

#include "qpercept/analysis.hpp"

#include "qpercept/errors.hpp"
#include "qpercept/metrics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <random>

namespace qpercept {

double circle_label(const Point& x, double radius)
{
    return x[0] * x[0] + x[1] * x[1] < radius * radius ? -1.0 : 1.0;
}

CircularDataset circular_dataset(int n, double radius, std::uint64_t seed)
{
    if (n < 1) {
        throw ConfigurationError("circular dataset needs at least one point");
    }
    if (!(radius > 0.0)) {
        throw ConfigurationError("circle radius must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-std::numbers::pi, std::numbers::pi);
    CircularDataset data;
    data.radius = radius;
    for (int i = 0; i < n; ++i) {
        const double a = coord(rng);
        const double b = coord(rng);
        data.points.push_back({a, b});
        data.labels.push_back(circle_label(data.points.back(), radius));
    }
    return data;
}

CircularDataset flip_labels(CircularDataset data)
{
    for (auto& y : data.labels) {
        y = -y;
    }
    return data;
}

Row4 encoding_probabilities(Encoding encoding, const Point& x)
{
    QuantumState state(2);
    for (int q = 0; q < 2; ++q) {
        if (encoding == Encoding::RxAngle) {
            state.apply(GateOp::rx(q, x[static_cast<std::size_t>(q)]));
        } else {
            state.apply(GateOp::h(q));
            state.apply(GateOp::rot(q, x[0], x[1], 0.0));
        }
    }
    const int qubits[] = {0, 1};
    const auto p = state.probabilities(qubits);
    return {p[0], p[1], p[2], p[3]};
}

std::vector<Row4> encoding_probability_vectors(Encoding encoding, std::span<const Point> points)
{
    std::vector<Row4> out;
    out.reserve(points.size());
    for (const auto& x : points) {
        out.push_back(encoding_probabilities(encoding, x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// PCA

namespace {

Row4 column_mean(std::span<const Row4> rows)
{
    Row4 mean{};
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < 4; ++j) {
            mean[j] += r[j];
        }
    }
    for (auto& m : mean) {
        m /= static_cast<double>(rows.size());
    }
    return mean;
}

} // namespace

std::array<Row4, 4> covariance_4(std::span<const Row4> rows)
{
    if (rows.size() < 2) {
        throw ConfigurationError("covariance needs at least two rows");
    }
    const auto mean = column_mean(rows);
    std::array<Row4, 4> cov{};
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                cov[i][j] += (r[i] - mean[i]) * (r[j] - mean[j]);
            }
        }
    }
    for (auto& row : cov) {
        for (auto& v : row) {
            v /= static_cast<double>(rows.size() - 1);
        }
    }
    return cov;
}

PcaProjection pca_2d(std::span<const Row4> rows)
{
    if (rows.size() < 3) {
        throw ConfigurationError("PCA needs at least three rows");
    }
    const auto cov = covariance_4(rows);
    Eigen::Matrix4d c;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            c(i, j) = cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    // Eigenvalues come back ascending.
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(c);
    if (solver.info() != Eigen::Success) {
        throw ConfigurationError("covariance eigendecomposition failed");
    }

    PcaProjection out;
    out.mean = column_mean(rows);
    for (int k = 0; k < 2; ++k) {
        const int col = 3 - k;
        Eigen::Vector4d v = solver.eigenvectors().col(col);
        // Fix the sign: largest-magnitude entry positive.
        Eigen::Index arg = 0;
        v.cwiseAbs().maxCoeff(&arg);
        if (v(arg) < 0) {
            v = -v;
        }
        for (int j = 0; j < 4; ++j) {
            out.components[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = v(j);
        }
        out.explained_variance[static_cast<std::size_t>(k)] = std::max(0.0, solver.eigenvalues()(col));
    }

    out.projected.reserve(rows.size());
    for (const auto& r : rows) {
        Row2 p{};
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t j = 0; j < 4; ++j) {
                p[k] += (r[j] - out.mean[j]) * out.components[k][j];
            }
        }
        out.projected.push_back(p);
    }
    return out;
}

double separability_score(std::span<const Row2> points, std::span<const double> labels)
{
    if (points.size() != labels.size()) {
        throw StructuralError("separability: points and labels differ in length");
    }
    if (points.empty()) {
        return 0.5;
    }
    constexpr int kDirections = 720;
    const auto n = points.size();
    const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1.0));
    std::vector<std::pair<double, double>> proj(n);
    double best = 0.5;
    for (int d = 0; d < kDirections; ++d) {
        // Half a turn suffices: the opposite direction is covered by 1 - accuracy.
        const double angle = std::numbers::pi * d / kDirections;
        const double ux = std::cos(angle);
        const double uy = std::sin(angle);
        for (std::size_t i = 0; i < n; ++i) {
            proj[i] = {points[i][0] * ux + points[i][1] * uy, labels[i]};
        }
        std::sort(proj.begin(), proj.end());
        // Predict -1 below the threshold, +1 above; start with everything above.
        std::size_t correct = positives;
        best = std::max(best, std::max(correct, n - correct) / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            correct = proj[i].second < 0 ? correct + 1 : correct - 1;
            // Only thresholds between distinct projections are realizable.
            if (i + 1 < n && proj[i + 1].first == proj[i].first) {
                continue;
            }
            best = std::max(best, std::max(correct, n - correct) / static_cast<double>(n));
        }
    }
    return best;
}

double separability_score(const PcaProjection& projection, std::span<const double> labels)
{
    return separability_score(projection.projected, labels);
}

EncodingStudy encoding_study(const CircularDataset& data)
{
    EncodingStudy study;
    study.rx_probabilities = encoding_probability_vectors(Encoding::RxAngle, data.points);
    study.roth_probabilities = encoding_probability_vectors(Encoding::RotH, data.points);
    study.rx = pca_2d(study.rx_probabilities);
    study.roth = pca_2d(study.roth_probabilities);
    study.rx_score = separability_score(study.rx, data.labels);
    study.roth_score = separability_score(study.roth, data.labels);
    return study;
}

// ---------------------------------------------------------------------------
// Labelling

namespace {

LabellingCase train_case(std::string name, const CircuitSpec& circuit, const CircularDataset& data,
                         const TrainConfig& cfg)
{
    LabellingCase c;
    c.name = std::move(name);
    c.run = train(circuit, data.points, data.labels, cfg, LabelKind::Binary);
    c.run.architecture = {ArchKind::DissipativeQP, 1, Encoding::RxAngle};
    c.predictions = predict(circuit, c.run.final_params, data.points);
    c.final_loss = c.run.final_loss;
    c.accuracy = accuracy(c.predictions, data.labels);
    std::size_t count = 0;
    for (std::size_t k = 0; k < data.points.size(); ++k) {
        if (data.labels[k] < 0) {
            // <Z> = alpha^2 - beta^2 with alpha^2 + beta^2 = 1.
            c.minus_class_probability[0] += (1.0 + c.predictions[k]) / 2.0;
            c.minus_class_probability[1] += (1.0 - c.predictions[k]) / 2.0;
            ++count;
        }
    }
    if (count > 0) {
        c.minus_class_probability[0] /= static_cast<double>(count);
        c.minus_class_probability[1] /= static_cast<double>(count);
    }
    return c;
}

} // namespace

LabellingReport labelling_experiment(const TrainConfig& cfg, int n_points, double radius, std::uint64_t data_seed)
{
    cfg.validate();
    LabellingReport report;
    report.data = circular_dataset(n_points, radius, data_seed);
    const auto flipped = flip_labels(report.data);
    const auto qp = build({ArchKind::DissipativeQP, 1, Encoding::RxAngle});
    report.inner_negative = train_case("inner_negative", qp, report.data, cfg);
    report.flipped = train_case("flipped", qp, flipped, cfg);
    report.flipped_with_x = train_case("flipped_with_x", with_output_flip(qp), flipped, cfg);
    return report;
}

// ---------------------------------------------------------------------------
// Input range

NormalizationReport normalization_experiment(const ExperimentOptions& options)
{
    const ArchitectureId teacher{ArchKind::DeepTeacher4, 1, Encoding::RxAngle};
    const std::vector<ArchitectureId> students{{ArchKind::DissipativeQP, 1, Encoding::RxAngle},
                                               {ArchKind::Reuploading, 2, Encoding::RxAngle}};
    NormalizationReport report;
    auto full = options;
    full.lo = -std::numbers::pi;
    full.hi = std::numbers::pi;
    report.full_range = run_experiment(teacher, students, full);
    auto unit = options;
    unit.lo = -1.0;
    unit.hi = 1.0;
    report.unit_range = run_experiment(teacher, students, unit);

    auto gap = [](const ExperimentResult& r) {
        return r.students[0].mean_final_loss - r.students[1].mean_final_loss;
    };
    report.full_gap = gap(report.full_range);
    report.unit_gap = gap(report.unit_range);
    report.gap_ratio = std::abs(report.unit_gap) / std::abs(report.full_gap);
    return report;
}

} // namespace qpercept
