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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// The teacher-student criteria run the full 10-seed protocol and take a while.

#include "oracles.hpp"

#include "qpercept/analysis.hpp"
#include "qpercept/metrics.hpp"
#include "qpercept/teacher_student.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace qpercept;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok) { pass = pass && ok; }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %2d  %-28s %s (%.0fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
}

int worker_threads()
{
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

ExperimentOptions protocol(bool binary)
{
    ExperimentOptions opt;
    opt.binary = binary;
    opt.threads = worker_threads();
    return opt;
}

const ArchitectureId kDqp = ArchitectureId::parse("dissipative_qp");
const ArchitectureId kR2 = ArchitectureId::parse("reuploading:2");

void simulator(Outcome& o)
{
    std::mt19937_64 rng(20260101);
    double amp = 0, norm = 0;
    const int circuits = 140;
    for (int t = 0; t < circuits; ++t) {
        const int n = 1 + t % 7;
        const int depth = 1 + static_cast<int>(rng() % 50);
        std::vector<GateOp> gates;
        auto s = new_state(n);
        for (int g = 0; g < depth; ++g) {
            gates.push_back(oracle::random_gate(n, rng));
            s.apply(gates.back());
        }
        const auto ref = oracle::simulate(gates, n);
        for (std::size_t i = 0; i < ref.size(); ++i) {
            amp = std::max(amp, std::abs(s.amplitudes()[i] - ref[i]));
        }
        norm = std::max(norm, std::abs(s.norm_squared() - 1.0));
    }
    o.require(amp < 1e-9 && norm < 1e-10);
    o.detail << circuits << " circuits, max amplitude dev " << amp << ", norm dev " << norm;
}

void gradients(Outcome& o)
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    double worst = 0;
    for (const auto& arch : all_architectures()) {
        const auto c = build(arch);
        for (int draw = 0; draw < 5; ++draw) {
            const auto w = init_params(c.n_params(), 2 * kPi, rng());
            std::vector<Point> pts;
            std::vector<double> y;
            for (int i = 0; i < 8; ++i) {
                pts.push_back({u(rng), u(rng)});
                y.push_back(binarize(u(rng)));
            }
            const auto ps = loss_and_gradient(c, w, pts, y).gradient;
            const auto fd = oracle::finite_difference(c, w, pts, y, 1e-5);
            for (std::size_t i = 0; i < fd.size(); ++i) {
                worst = std::max(worst, std::abs(ps[i] - fd[i]));
            }
        }
    }
    o.require(worst < 1e-5);
    o.detail << "7 architectures x 5 draws, max |shift - fd| " << worst;
}

} // namespace

int main()
{
    std::cout << "qpercept acceptance suite\n";
    criterion(1, "simulator vs dense oracle", simulator);
    criterion(2, "parameter-shift gradients", gradients);

    // Reuploading(2) teacher datasets are shared by the toy-model and alteration criteria.
    const std::vector<ArchitectureId> toy_students{kDqp, kR2, ArchitectureId::parse("qnn_two_qp")};
    const std::vector<ArchitectureId> altered{ArchitectureId::parse("eight_gate_qp"),
                                              ArchitectureId::parse("deep_dissipative_qp"),
                                              ArchitectureId::parse("random_deep_qp")};
    ExperimentResult toy;
    criterion(3, "toy model ordering", [&](Outcome& o) {
        toy = run_experiment(kR2, toy_students, protocol(true));
        const double dqp = toy.student(kDqp).mean_relative_entropy;
        const double r2 = toy.student(kR2).mean_relative_entropy;
        o.require(r2 < 0.02);
        o.require(r2 <= dqp / 5);
        o.require(dqp > 0.05);
        o.detail << "mean S: dissipative_qp " << dqp << " (need > 0.05), reuploading:2 " << r2
                 << " (need < 0.02 and <= " << dqp / 5 << ")";
    });

    criterion(4, "reverse direction", [&](Outcome& o) {
        const std::vector<ArchitectureId> students{kDqp, kR2};
        const auto r = run_experiment(kDqp, students, protocol(true));
        for (const auto& s : r.students) {
            o.require(s.mean_relative_entropy < 0.02);
            o.require(s.mean_accuracy > 0.85);
            o.detail << s.architecture.name() << ": S " << s.mean_relative_entropy << ", accuracy "
                     << s.mean_accuracy << "; ";
        }
    });

    criterion(5, "deep teacher gap", [&](Outcome& o) {
        const std::vector<ArchitectureId> students{kDqp, kR2};
        const auto r = run_experiment(ArchitectureId::parse("deep_teacher4"), students, protocol(true));
        const auto& a = r.student(kDqp);
        const auto& b = r.student(kR2);
        o.require(b.mean_final_loss < a.mean_final_loss);
        for (const auto* s : {&a, &b}) {
            o.require(s->mean_accuracy >= 0.65 && s->mean_accuracy <= 0.95);
        }
        o.detail << "final loss dissipative_qp " << a.mean_final_loss << ", reuploading:2 " << b.mean_final_loss
                 << "; accuracy " << a.mean_accuracy << ", " << b.mean_accuracy;
    });

    criterion(6, "alterations", [&](Outcome& o) {
        if (toy.students.empty()) {
            throw std::runtime_error("toy-model experiment did not complete");
        }
        auto opt = protocol(false);
        const auto alt = run_experiment(kR2, altered, opt);
        if (alt.teacher_seeds != toy.teacher_seeds) {
            throw std::runtime_error("teacher datasets differ between runs");
        }
        const double base = toy.student(kDqp).mean_final_loss;
        o.detail << "dissipative_qp loss " << base;
        for (const auto& s : alt.students) {
            o.require(s.mean_final_loss >= 0.8 * base);
            o.detail << "; " << s.architecture.name() << " " << s.mean_final_loss;
        }
        const auto& qnn = toy.student(ArchitectureId::parse("qnn_two_qp"));
        o.require(qnn.mean_final_loss < 0.5 * base);
        o.require(qnn.mean_accuracy >= 0.8);
        o.require(qnn.mean_relative_entropy > toy.student(kR2).mean_relative_entropy);
        o.detail << "; qnn_two_qp " << qnn.mean_final_loss << " (need < " << 0.5 * base << "), accuracy "
                 << qnn.mean_accuracy << ", S " << qnn.mean_relative_entropy << " vs reuploading:2 "
                 << toy.student(kR2).mean_relative_entropy;
    });

    criterion(7, "encoding study", [&](Outcome& o) {
        const auto data = circular_dataset(500, kDefaultCircleRadius, 0);
        const auto study = encoding_study(data);
        double dev = 0;
        for (const auto* pair : {&study.rx_probabilities, &study.roth_probabilities}) {
            const auto p = pca_2d(*pair);
            const auto eig = oracle::jacobi(oracle::covariance(*pair));
            for (int k = 0; k < 2; ++k) {
                double sign = 0;
                for (int i = 0; i < 4; ++i) {
                    sign += p.components[k][i] * eig.vectors[k][i];
                }
                sign = sign < 0 ? -1 : 1;
                for (int i = 0; i < 4; ++i) {
                    dev = std::max(dev, std::abs(p.components[k][i] - sign * eig.vectors[k][i]));
                }
            }
        }
        const double gap = study.rx_score - study.roth_score;
        o.require(gap >= 0.15);
        o.require(dev < 1e-8);
        o.detail << "separability rx " << study.rx_score << ", rot-h " << study.roth_score << ", gap " << gap
                 << "; PCA vs Jacobi max dev " << dev;
    });

    criterion(8, "labelling", [&](Outcome& o) {
        const auto r = labelling_experiment(TrainConfig{});
        const auto& a = r.inner_negative;
        const auto& b = r.flipped;
        const auto& c = r.flipped_with_x;
        o.require(a.minus_class_probability[1] > a.minus_class_probability[0]);
        o.require(b.minus_class_probability[0] > 0.8);
        o.require(b.accuracy < a.accuracy);
        o.require(std::abs(c.accuracy - a.accuracy) <= 0.05);
        const auto circuit = build(ArchitectureId{});
        const auto flipped = with_output_flip(circuit);
        double identity = 0;
        for (const auto& x : r.data.points) {
            identity = std::max(identity, std::abs(forward(flipped, x, c.run.final_params) +
                                                   forward(circuit, x, c.run.final_params)));
        }
        o.require(identity < 1e-12);
        o.detail << "inner -1 [a2, b2] = [" << a.minus_class_probability[0] << ", " << a.minus_class_probability[1]
                 << "], flipped [" << b.minus_class_probability[0] << ", " << b.minus_class_probability[1]
                 << "] (need a2 > 0.8); accuracy " << a.accuracy << " / " << b.accuracy << " / " << c.accuracy
                 << "; X identity " << identity;
    });

    criterion(9, "input normalization", [&](Outcome& o) {
        const auto r = normalization_experiment(protocol(false));
        o.require(r.gap_ratio < 0.5);
        o.detail << "gap [-pi, pi] " << r.full_gap << ", gap [-1, 1] " << r.unit_gap << ", ratio " << r.gap_ratio;
    });

    criterion(10, "metric properties", [&](Outcome& o) {
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> u(-1, 1);
        double self = 0, lowest = 1e300;
        for (int i = 0; i < 1000; ++i) {
            PredictionMap a{11, -kPi, kPi, std::vector<double>(121)};
            PredictionMap b = a;
            for (std::size_t k = 0; k < a.values.size(); ++k) {
                a.values[k] = u(rng);
                b.values[k] = u(rng);
            }
            self = std::max(self, std::abs(relative_entropy(a, a)));
            lowest = std::min(lowest, relative_entropy(a, b));
        }
        const bool table = binarize(0.7) == 1 && binarize(-0.2) == -1 && binarize(0.0) == 1 &&
                           accuracy(std::vector<double>{1, -1}, std::vector<double>{1, -1}) == 1.0 &&
                           accuracy(std::vector<double>{-1, 1}, std::vector<double>{1, -1}) == 0.0 &&
                           accuracy(std::vector<double>{0.3, -0.2, 0.9}, std::vector<double>{1, 1, 1}) == 2.0 / 3.0;
        o.require(self < 1e-12 && lowest >= 0 && table);
        o.detail << "max |S(P||P)| " << self << ", min S over 1000 pairs " << lowest << ", truth tables "
                 << (table ? "exact" : "WRONG");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << "\n";
    return failures == 0 ? 0 : 1;
}
