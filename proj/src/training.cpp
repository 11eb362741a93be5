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

#include "qpercept/training.hpp"

#include "kernel.hpp"
#include "qpercept/errors.hpp"
#include "qpercept/metrics.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qpercept {

std::string_view optimizer_name(Optimizer opt)
{
    return opt == Optimizer::VanillaGD ? "gd" : "adam";
}

Optimizer parse_optimizer(std::string_view text)
{
    if (text == "gd") {
        return Optimizer::VanillaGD;
    }
    if (text == "adam") {
        return Optimizer::AdaptiveMoment;
    }
    throw ParseError("unknown optimizer '" + std::string(text) + "' (expected gd or adam)");
}

void TrainConfig::validate() const
{
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigurationError("learning_rate must be positive");
    }
    if (epochs < 1) {
        throw ConfigurationError("epochs must be at least 1");
    }
    if (!(init_scale >= 0.0) || !std::isfinite(init_scale)) {
        throw ConfigurationError("init_scale must be a finite non-negative number");
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> stream)
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(base);
    for (auto s : stream) {
        h = mix(h ^ mix(s));
    }
    return h;
}

std::vector<double> init_params(int n_params, double scale, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> w(static_cast<std::size_t>(n_params));
    for (auto& v : w) {
        v = scale * dist(rng);
    }
    return w;
}

namespace {

void check_dataset(std::span<const Point> points, std::span<const double> targets)
{
    if (points.empty()) {
        throw ConfigurationError("dataset is empty");
    }
    if (points.size() != targets.size()) {
        throw StructuralError("dataset has " + std::to_string(points.size()) + " points but " +
                              std::to_string(targets.size()) + " labels");
    }
}

void check_params(const CircuitSpec& circuit, std::span<const double> w)
{
    if (w.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw ConfigurationError("expected " + std::to_string(circuit.n_params()) +
                                 " parameters, got " + std::to_string(w.size()));
    }
}

constexpr double kShift = std::numbers::pi / 2;

// Reusable buffers for evaluating one point and its parameter-shift derivatives.
class ShiftEvaluator {
  public:
    explicit ShiftEvaluator(const CircuitSpec& circuit) : circuit_(circuit), state_(circuit.n_qubits()),
        cached_(circuit.n_qubits()), scratch_(circuit.n_qubits())
    {
        for (const auto& op : circuit.ops()) {
            for (const auto& a : op.angles) {
                if (a.source == Angle::Source::Param && !is_rotation(op.kind)) {
                    throw UnsupportedArchitectureError(std::string("cannot shift parameters of ") +
                                                       std::string(gate_name(op.kind)));
                }
            }
        }
    }

    // Returns <Z> and writes d<Z>/dw into `dz` (size n_params).
    double evaluate(const Point& x, std::span<const double> w, std::span<double> dz)
    {
        const auto& ops = circuit_.ops();
        detail::resolve_all(circuit_, x, w, resolved_);
        state_ = QuantumState(circuit_.n_qubits());
        for (std::size_t j = 0; j < ops.size(); ++j) {
            const auto& op = ops[j];
            bool trainable = false;
            for (const auto& a : op.angles) {
                trainable = trainable || a.source == Angle::Source::Param;
            }
            if (trainable) {
                cached_ = state_;
                for (std::size_t k = 0; k < op.angles.size(); ++k) {
                    if (op.angles[k].source != Angle::Source::Param) {
                        continue;
                    }
                    const double plus = shifted_value(j, static_cast<int>(k), x, w, kShift);
                    const double minus = shifted_value(j, static_cast<int>(k), x, w, -kShift);
                    dz[static_cast<std::size_t>(op.angles[k].index)] = 0.5 * (plus - minus);
                }
            }
            detail::apply(state_, resolved_[j]);
        }
        return state_.expectation_z(circuit_.measured_qubit());
    }

    double value(const Point& x, std::span<const double> w)
    {
        detail::resolve_all(circuit_, x, w, resolved_);
        state_ = QuantumState(circuit_.n_qubits());
        for (const auto& op : resolved_) {
            detail::apply(state_, op);
        }
        return state_.expectation_z(circuit_.measured_qubit());
    }

  private:
    double shifted_value(std::size_t j, int angle, const Point& x, std::span<const double> w, double shift)
    {
        const auto& op = circuit_.ops()[j];
        scratch_ = cached_;
        scratch_.apply_matrix(op.targets.front(), detail::slot_matrix(op, x, w, angle, shift));
        for (std::size_t i = j + 1; i < resolved_.size(); ++i) {
            detail::apply(scratch_, resolved_[i]);
        }
        return scratch_.expectation_z(circuit_.measured_qubit());
    }

    const CircuitSpec& circuit_;
    std::vector<detail::ResolvedOp> resolved_;
    QuantumState state_;
    QuantumState cached_;
    QuantumState scratch_;
};

} // namespace

std::vector<double> predict(const CircuitSpec& circuit, std::span<const double> w,
                            std::span<const Point> points)
{
    check_params(circuit, w);
    std::vector<double> out;
    out.reserve(points.size());
    std::vector<detail::ResolvedOp> resolved;
    for (const auto& x : points) {
        if (!std::isfinite(x[0]) || !std::isfinite(x[1])) {
            throw ConfigurationError("input point must be finite");
        }
        detail::resolve_all(circuit, x, w, resolved);
        QuantumState state(circuit.n_qubits());
        for (const auto& op : resolved) {
            detail::apply(state, op);
        }
        out.push_back(state.expectation_z(circuit.measured_qubit()));
    }
    return out;
}

double loss(const CircuitSpec& circuit, std::span<const double> w, std::span<const Point> points,
            std::span<const double> targets)
{
    check_dataset(points, targets);
    const auto predictions = predict(circuit, w, points);
    double total = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double r = targets[k] - predictions[k];
        total += r * r;
    }
    return total / static_cast<double>(points.size());
}

double loss(const CircuitSpec& circuit, std::span<const double> w, const LabeledGrid& data, LabelKind kind)
{
    return loss(circuit, w, data.points, data.labels(kind));
}

LossAndGradient loss_and_gradient(const CircuitSpec& circuit, std::span<const double> w,
                                  std::span<const Point> points, std::span<const double> targets)
{
    check_dataset(points, targets);
    check_params(circuit, w);
    ShiftEvaluator eval(circuit);
    const auto n_params = static_cast<std::size_t>(circuit.n_params());
    LossAndGradient out;
    out.gradient.assign(n_params, 0.0);
    out.predictions.reserve(points.size());
    std::vector<double> dz(n_params, 0.0);
    const double scale = 1.0 / static_cast<double>(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double f = eval.evaluate(points[k], w, dz);
        const double r = targets[k] - f;
        out.loss += r * r;
        // d/dw (y - f)^2 = -2 (y - f) df/dw
        for (std::size_t j = 0; j < n_params; ++j) {
            out.gradient[j] -= 2.0 * r * dz[j] * scale;
        }
        out.predictions.push_back(f);
    }
    out.loss *= scale;
    return out;
}

std::vector<double> gradient(const CircuitSpec& circuit, std::span<const double> w,
                             std::span<const Point> points, std::span<const double> targets)
{
    return loss_and_gradient(circuit, w, points, targets).gradient;
}

std::vector<double> gradient(const CircuitSpec& circuit, std::span<const double> w,
                             const LabeledGrid& data, LabelKind kind)
{
    return gradient(circuit, w, data.points, data.labels(kind));
}

std::vector<double> forward_gradient(const CircuitSpec& circuit, const Point& x, std::span<const double> w)
{
    check_params(circuit, w);
    ShiftEvaluator eval(circuit);
    std::vector<double> dz(static_cast<std::size_t>(circuit.n_params()), 0.0);
    eval.evaluate(x, w, dz);
    return dz;
}

TrainRun train(const CircuitSpec& circuit, std::span<const Point> points, std::span<const double> targets,
               const TrainConfig& cfg, LabelKind kind)
{
    cfg.validate();
    check_dataset(points, targets);

    TrainRun run;
    run.config = cfg;
    run.label_kind = kind;
    auto w = init_params(circuit.n_params(), cfg.init_scale, cfg.seed);
    const auto n = w.size();

    constexpr double beta1 = 0.9;
    constexpr double beta2 = 0.999;
    constexpr double eps = 1e-8;
    std::vector<double> m(n, 0.0);
    std::vector<double> v(n, 0.0);
    double beta1_t = 1.0;
    double beta2_t = 1.0;

    auto record = [&](double l, std::span<const double> predictions) {
        if (!std::isfinite(l)) {
            throw TrainingDivergedError("loss became non-finite");
        }
        run.loss_curve.push_back(l);
        if (kind == LabelKind::Binary) {
            run.accuracy_curve.push_back(accuracy(predictions, targets));
        }
    };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const auto lg = loss_and_gradient(circuit, w, points, targets);
        record(lg.loss, lg.predictions);
        if (cfg.optimizer == Optimizer::VanillaGD) {
            for (std::size_t j = 0; j < n; ++j) {
                w[j] -= cfg.learning_rate * lg.gradient[j];
            }
            continue;
        }
        beta1_t *= beta1;
        beta2_t *= beta2;
        for (std::size_t j = 0; j < n; ++j) {
            const double g = lg.gradient[j];
            m[j] = beta1 * m[j] + (1.0 - beta1) * g;
            v[j] = beta2 * v[j] + (1.0 - beta2) * g * g;
            const double m_hat = m[j] / (1.0 - beta1_t);
            const double v_hat = v[j] / (1.0 - beta2_t);
            w[j] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + eps);
        }
    }

    const auto predictions = predict(circuit, w, points);
    double total = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double r = targets[k] - predictions[k];
        total += r * r;
    }
    run.final_loss = total / static_cast<double>(points.size());
    if (!std::isfinite(run.final_loss)) {
        throw TrainingDivergedError("final loss is non-finite");
    }
    std::vector<double> signs(targets.size());
    for (std::size_t k = 0; k < targets.size(); ++k) {
        signs[k] = binarize(targets[k]);
    }
    run.final_accuracy = accuracy(predictions, signs);
    run.final_params = std::move(w);
    return run;
}

TrainRun train(const CircuitSpec& circuit, const LabeledGrid& data, const TrainConfig& cfg, LabelKind kind)
{
    return train(circuit, data.points, data.labels(kind), cfg, kind);
}

TrainRun train(const ArchitectureId& arch, const LabeledGrid& data, const TrainConfig& cfg, LabelKind kind)
{
    auto run = train(build(arch), data, cfg, kind);
    run.architecture = arch;
    return run;
}

} // namespace qpercept
