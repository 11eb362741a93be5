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

// Squared-error loss, parameter-shift gradients and full-batch training.

#include "qpercept/circuits.hpp"
#include "qpercept/dataset.hpp"

#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpercept {

enum class Optimizer { VanillaGD, AdaptiveMoment };

std::string_view optimizer_name(Optimizer opt);
Optimizer parse_optimizer(std::string_view text);

struct TrainConfig {
    double learning_rate = 0.05;
    int epochs = 150;
    Optimizer optimizer = Optimizer::AdaptiveMoment;
    std::uint64_t seed = 0;
    /// Initial angles are drawn uniformly from [0, init_scale).
    double init_scale = 2 * std::numbers::pi;

    /// Throws ConfigurationError unless learning_rate > 0 and epochs >= 1.
    void validate() const;

    friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct TrainRun {
    /// Loss of the parameters entering each epoch.
    std::vector<double> loss_curve;
    /// Binary-label runs only, same indexing as loss_curve.
    std::vector<double> accuracy_curve;
    std::vector<double> final_params;
    /// Loss of final_params (after the last update) and its accuracy against the binarized targets.
    double final_loss = 0.0;
    double final_accuracy = 0.0;
    TrainConfig config;
    ArchitectureId architecture;
    LabelKind label_kind = LabelKind::Continuous;
};

struct LossAndGradient {
    double loss = 0.0;
    std::vector<double> gradient;
    std::vector<double> predictions;
};

/// splitmix64 over the base seed and a list of stream identifiers.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> stream);

std::vector<double> init_params(int n_params, double scale, std::uint64_t seed);

std::vector<double> predict(const CircuitSpec& circuit, std::span<const double> w,
                            std::span<const Point> points);

/// Mean over points of (target - forward)^2.
double loss(const CircuitSpec& circuit, std::span<const double> w, std::span<const Point> points,
            std::span<const double> targets);
double loss(const CircuitSpec& circuit, std::span<const double> w, const LabeledGrid& data,
            LabelKind kind = LabelKind::Continuous);

/// Exact gradient of loss() by the parameter-shift rule.
LossAndGradient loss_and_gradient(const CircuitSpec& circuit, std::span<const double> w,
                                  std::span<const Point> points, std::span<const double> targets);

std::vector<double> gradient(const CircuitSpec& circuit, std::span<const double> w,
                             std::span<const Point> points, std::span<const double> targets);
std::vector<double> gradient(const CircuitSpec& circuit, std::span<const double> w,
                             const LabeledGrid& data, LabelKind kind = LabelKind::Continuous);

/// d<Z>/dw at a single point, by parameter shift.
std::vector<double> forward_gradient(const CircuitSpec& circuit, const Point& x,
                                     std::span<const double> w);

TrainRun train(const CircuitSpec& circuit, std::span<const Point> points,
               std::span<const double> targets, const TrainConfig& cfg, LabelKind kind);
TrainRun train(const CircuitSpec& circuit, const LabeledGrid& data, const TrainConfig& cfg,
               LabelKind kind);
TrainRun train(const ArchitectureId& arch, const LabeledGrid& data, const TrainConfig& cfg,
               LabelKind kind);

} // namespace qpercept
