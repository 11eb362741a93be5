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

// Circuit IR with symbolic data / parameter slots, plus builders for the
// perceptron and re-uploading architectures.

#include "qpercept/qsim.hpp"

#include <Eigen/Dense>

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpercept {

using Point = std::array<double, 2>;

/// An angle that is fixed, read from the input point, or read from the parameter vector.
struct Angle {
    enum class Source { Constant, Data, Param };

    Source source = Source::Constant;
    double value = 0.0; // Constant
    int index = 0;      // Data: input component 0/1; Param: slot

    static Angle constant(double v) { return {Source::Constant, v, 0}; }
    static Angle data(int component) { return {Source::Data, 0.0, component}; }
    static Angle param(int slot) { return {Source::Param, 0.0, slot}; }

    friend bool operator==(const Angle&, const Angle&) = default;
};

struct SlotOp {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<Angle> angles;

    bool uses_data() const;

    friend bool operator==(const SlotOp&, const SlotOp&) = default;
};

enum class Encoding { RxAngle, RotH };

enum class ArchKind {
    DissipativeQP,
    Reuploading,
    DeepTeacher4,
    EightGateQP,
    DeepDissipativeQP,
    QnnTwoQP,
    RandomDeepQP,
};

struct ArchitectureId {
    ArchKind kind = ArchKind::DissipativeQP;
    int layers = 1; // only meaningful for Reuploading
    Encoding encoding = Encoding::RxAngle;

    /// Canonical name: "dissipative_qp", "reuploading:2", ..., with "@roth" appended for RotH.
    std::string name() const;

    /// Inverse of name(). Throws ParseError on unknown names or layers < 1.
    static ArchitectureId parse(std::string_view text);

    friend bool operator==(const ArchitectureId&, const ArchitectureId&) = default;
};

/// The seven architectures with the default angle encoding; reuploading uses two layers.
std::vector<ArchitectureId> all_architectures();

class CircuitSpec {
  public:
    CircuitSpec(int n_qubits, std::vector<SlotOp> ops, int measured_qubit);

    int n_qubits() const { return n_qubits_; }
    const std::vector<SlotOp>& ops() const { return ops_; }
    int measured_qubit() const { return measured_qubit_; }
    int n_params() const { return n_params_; }
    /// Number of times the full 2-D input is uploaded.
    int encoding_count() const { return encoding_count_; }

  private:
    int n_qubits_;
    std::vector<SlotOp> ops_;
    int measured_qubit_;
    int n_params_ = 0;
    int encoding_count_ = 0;
};

CircuitSpec build(const ArchitectureId& arch);

/// Same circuit with an X gate on the measured qubit right before readout.
CircuitSpec with_output_flip(const CircuitSpec& circuit);

/// Resolves every slot. Throws ConfigurationError if w.size() != n_params.
std::vector<GateOp> bind(const CircuitSpec& circuit, const Point& x, std::span<const double> w);

QuantumState run(const CircuitSpec& circuit, const Point& x, std::span<const double> w);

/// <Z> of the measured qubit, in [-1, 1].
double forward(const CircuitSpec& circuit, const Point& x, std::span<const double> w);

/// One gate per line, e.g. "ROT q0 [p0, p1, p2]".
std::string describe(const CircuitSpec& circuit);

/// Naive full-unitary construction through Kronecker products. Refuses more than 10 qubits.
Eigen::MatrixXcd dense_unitary(std::span<const GateOp> gates, int n_qubits);
Eigen::MatrixXcd dense_gate_unitary(const GateOp& gate, int n_qubits);
Eigen::MatrixXcd dense_unitary_oracle(const CircuitSpec& circuit, const Point& x,
                                      std::span<const double> w);

} // namespace qpercept
