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

#include "qpercept/circuits.hpp"

#include "kernel.hpp"
#include "qpercept/errors.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

namespace qpercept {

bool SlotOp::uses_data() const
{
    for (const auto& a : angles) {
        if (a.source == Angle::Source::Data) {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Architecture names

namespace {

struct NamedKind {
    std::string_view name;
    ArchKind kind;
};

constexpr NamedKind kNames[] = {
    {"dissipative_qp", ArchKind::DissipativeQP},
    {"reuploading", ArchKind::Reuploading},
    {"deep_teacher4", ArchKind::DeepTeacher4},
    {"eight_gate_qp", ArchKind::EightGateQP},
    {"deep_dissipative_qp", ArchKind::DeepDissipativeQP},
    {"qnn_two_qp", ArchKind::QnnTwoQP},
    {"random_deep_qp", ArchKind::RandomDeepQP},
};

constexpr std::string_view kRotHSuffix = "@roth";

} // namespace

std::string ArchitectureId::name() const
{
    std::string out;
    for (const auto& n : kNames) {
        if (n.kind == kind) {
            out = n.name;
        }
    }
    if (kind == ArchKind::Reuploading) {
        out += ":" + std::to_string(layers);
    }
    if (encoding == Encoding::RotH) {
        out += kRotHSuffix;
    }
    return out;
}

ArchitectureId ArchitectureId::parse(std::string_view text)
{
    const std::string original(text);
    ArchitectureId id;
    if (text.ends_with(kRotHSuffix)) {
        id.encoding = Encoding::RotH;
        text.remove_suffix(kRotHSuffix.size());
    }
    std::string_view layers_text;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        layers_text = text.substr(colon + 1);
        text = text.substr(0, colon);
    }
    bool found = false;
    for (const auto& n : kNames) {
        if (n.name == text) {
            id.kind = n.kind;
            found = true;
        }
    }
    if (!found) {
        throw ParseError("unknown architecture '" + original + "'");
    }
    if (id.kind == ArchKind::Reuploading) {
        if (layers_text.empty()) {
            throw ParseError("architecture '" + original + "' needs a layer count, e.g. reuploading:2");
        }
        int layers = 0;
        const auto* end = layers_text.data() + layers_text.size();
        const auto [ptr, ec] = std::from_chars(layers_text.data(), end, layers);
        if (ec != std::errc{} || ptr != end) {
            throw ParseError("architecture '" + original + "': malformed layer count");
        }
        if (layers < 1) {
            throw ParseError("architecture '" + original + "': layers must be >= 1");
        }
        id.layers = layers;
    } else if (!layers_text.empty()) {
        throw ParseError("architecture '" + original + "' does not take a layer count");
    }
    return id;
}

std::vector<ArchitectureId> all_architectures()
{
    return {
        {ArchKind::DissipativeQP, 1, Encoding::RxAngle}, {ArchKind::Reuploading, 2, Encoding::RxAngle},
        {ArchKind::DeepTeacher4, 1, Encoding::RxAngle},  {ArchKind::EightGateQP, 1, Encoding::RxAngle},
        {ArchKind::DeepDissipativeQP, 1, Encoding::RxAngle}, {ArchKind::QnnTwoQP, 1, Encoding::RxAngle},
        {ArchKind::RandomDeepQP, 1, Encoding::RxAngle},
    };
}

// ---------------------------------------------------------------------------
// CircuitSpec

CircuitSpec::CircuitSpec(int n_qubits, std::vector<SlotOp> ops, int measured_qubit)
    : n_qubits_(n_qubits), ops_(std::move(ops)), measured_qubit_(measured_qubit)
{
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("circuit qubit count out of range");
    }
    if (measured_qubit < 0 || measured_qubit >= n_qubits) {
        throw StructuralError("measured qubit out of range");
    }
    std::vector<int> param_uses;
    int data_ops = 0;
    for (const auto& op : ops_) {
        GateOp probe{op.kind, op.targets, op.controls, std::vector<double>(op.angles.size(), 0.0)};
        validate_gate(probe, n_qubits);
        for (const auto& a : op.angles) {
            if (a.source == Angle::Source::Data && (a.index < 0 || a.index > 1)) {
                throw StructuralError("data slot must reference input component 0 or 1");
            }
            if (a.source == Angle::Source::Param) {
                if (a.index < 0) {
                    throw StructuralError("negative parameter slot");
                }
                if (static_cast<std::size_t>(a.index) >= param_uses.size()) {
                    param_uses.resize(static_cast<std::size_t>(a.index) + 1, 0);
                }
                ++param_uses[static_cast<std::size_t>(a.index)];
            }
        }
        if (op.uses_data()) {
            ++data_ops;
            if (op.targets.front() == measured_qubit) {
                throw StructuralError("measured qubit must not carry a data-encoding gate");
            }
        }
    }
    for (std::size_t i = 0; i < param_uses.size(); ++i) {
        if (param_uses[i] != 1) {
            throw StructuralError("parameter slot " + std::to_string(i) + " used " +
                                  std::to_string(param_uses[i]) + " times");
        }
    }
    n_params_ = static_cast<int>(param_uses.size());
    encoding_count_ = data_ops / 2;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

class Builder {
  public:
    explicit Builder(Encoding encoding) : encoding_(encoding) {}

    void encode(int q0, int q1)
    {
        for (int q : {q0, q1}) {
            if (encoding_ == Encoding::RxAngle) {
                ops_.push_back({GateKind::RX, {q}, {}, {Angle::data(q == q0 ? 0 : 1)}});
            } else {
                // Rot(x1, x2, 0) H on every data qubit.
                ops_.push_back({GateKind::H, {q}, {}, {}});
                ops_.push_back(
                    {GateKind::ROT, {q}, {}, {Angle::data(0), Angle::data(1), Angle::constant(0.0)}});
            }
        }
    }

    void rot(int q)
    {
        ops_.push_back({GateKind::ROT, {q}, {}, {param(), param(), param()}});
    }

    void rot_pair(int q0, int q1)
    {
        rot(q0);
        rot(q1);
    }

    void cz(int a, int b) { ops_.push_back({GateKind::CZ, {b}, {a}, {}}); }
    void cnot(int c, int t) { ops_.push_back({GateKind::CNOT, {t}, {c}, {}}); }
    void mcx(std::vector<int> controls, int t) { ops_.push_back({GateKind::MCX, {t}, std::move(controls), {}}); }

    // [Rot x Rot; CZ; Rot x Rot] on the data pair.
    void processing_block(int q0, int q1)
    {
        rot_pair(q0, q1);
        cz(q0, q1);
        rot_pair(q0, q1);
    }

    void perceptron(int q0, int q1, int ancilla)
    {
        encode(q0, q1);
        processing_block(q0, q1);
        mcx({q0, q1}, ancilla);
    }

    std::vector<SlotOp> take() { return std::move(ops_); }

  private:
    Angle param() { return Angle::param(next_param_++); }

    Encoding encoding_;
    int next_param_ = 0;
    std::vector<SlotOp> ops_;
};

CircuitSpec build_reuploading(int layers, Encoding encoding)
{
    Builder b(encoding);
    for (int l = 0; l < layers; ++l) {
        b.encode(0, 1);
        b.processing_block(0, 1);
    }
    b.mcx({0, 1}, 2);
    return CircuitSpec(3, b.take(), 2);
}

// Data on q0/q1, ancillas q2, q3 and output q4. `extra_blocks` adds [Rot x Rot; CZ]
// stages on the data qubits before the last processing layer.
CircuitSpec build_deep_dissipative(int extra_blocks, Encoding encoding)
{
    Builder b(encoding);
    b.encode(0, 1);
    b.rot_pair(0, 1);
    b.cz(0, 1);
    for (int i = 0; i < extra_blocks; ++i) {
        b.rot_pair(0, 1);
        b.cz(0, 1);
    }
    b.rot_pair(0, 1);
    b.cnot(0, 2);
    b.cnot(1, 3);
    b.rot_pair(2, 3);
    // The output qubit is rotated off |0> first, otherwise the CZs act trivially on it.
    b.rot(4);
    b.cz(2, 4);
    b.cz(3, 4);
    b.rot(4);
    return CircuitSpec(5, b.take(), 4);
}

} // namespace

CircuitSpec build(const ArchitectureId& arch)
{
    switch (arch.kind) {
    case ArchKind::DissipativeQP: {
        Builder b(arch.encoding);
        b.perceptron(0, 1, 2);
        return CircuitSpec(3, b.take(), 2);
    }
    case ArchKind::Reuploading:
        if (arch.layers < 1) {
            throw ConfigurationError("reuploading needs at least one layer");
        }
        return build_reuploading(arch.layers, arch.encoding);
    case ArchKind::DeepTeacher4: return build_reuploading(4, arch.encoding);
    case ArchKind::EightGateQP: {
        Builder b(arch.encoding);
        b.encode(0, 1);
        for (int i = 0; i < 4; ++i) {
            b.rot_pair(0, 1);
            b.cnot(0, 1);
        }
        b.mcx({0, 1}, 2);
        return CircuitSpec(3, b.take(), 2);
    }
    case ArchKind::DeepDissipativeQP: return build_deep_dissipative(0, arch.encoding);
    case ArchKind::RandomDeepQP: return build_deep_dissipative(3, arch.encoding);
    case ArchKind::QnnTwoQP: {
        Builder b(arch.encoding);
        b.perceptron(0, 1, 2);
        b.perceptron(3, 4, 5);
        b.processing_block(2, 5);
        b.mcx({2, 5}, 6);
        return CircuitSpec(7, b.take(), 6);
    }
    }
    throw ConfigurationError("unknown architecture");
}

CircuitSpec with_output_flip(const CircuitSpec& circuit)
{
    auto ops = circuit.ops();
    ops.push_back({GateKind::X, {circuit.measured_qubit()}, {}, {}});
    return CircuitSpec(circuit.n_qubits(), std::move(ops), circuit.measured_qubit());
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void check_inputs(const CircuitSpec& circuit, const Point& x, std::span<const double> w)
{
    if (w.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw ConfigurationError("expected " + std::to_string(circuit.n_params()) +
                                 " parameters, got " + std::to_string(w.size()));
    }
    if (!std::isfinite(x[0]) || !std::isfinite(x[1])) {
        throw ConfigurationError("input point must be finite");
    }
}

} // namespace

std::vector<GateOp> bind(const CircuitSpec& circuit, const Point& x, std::span<const double> w)
{
    check_inputs(circuit, x, w);
    std::vector<GateOp> out;
    out.reserve(circuit.ops().size());
    for (const auto& op : circuit.ops()) {
        GateOp g{op.kind, op.targets, op.controls, {}};
        for (const auto& a : op.angles) {
            g.params.push_back(detail::resolve_angle(a, x, w));
        }
        out.push_back(std::move(g));
    }
    return out;
}

QuantumState run(const CircuitSpec& circuit, const Point& x, std::span<const double> w)
{
    check_inputs(circuit, x, w);
    QuantumState state(circuit.n_qubits());
    for (const auto& op : circuit.ops()) {
        detail::apply(state, detail::resolve(op, circuit.n_qubits(), x, w));
    }
    return state;
}

double forward(const CircuitSpec& circuit, const Point& x, std::span<const double> w)
{
    return run(circuit, x, w).expectation_z(circuit.measured_qubit());
}

std::string describe(const CircuitSpec& circuit)
{
    std::ostringstream out;
    out << "qubits " << circuit.n_qubits() << " measured q" << circuit.measured_qubit() << " params "
        << circuit.n_params() << " encodings " << circuit.encoding_count() << "\n";
    for (const auto& op : circuit.ops()) {
        out << gate_name(op.kind);
        for (int c : op.controls) {
            out << " q" << c;
        }
        if (!op.controls.empty()) {
            out << " ->";
        }
        out << " q" << op.targets.front();
        if (!op.angles.empty()) {
            out << " [";
            for (std::size_t i = 0; i < op.angles.size(); ++i) {
                const auto& a = op.angles[i];
                out << (i ? ", " : "");
                switch (a.source) {
                case Angle::Source::Constant: out << a.value; break;
                case Angle::Source::Data: out << "x" << a.index; break;
                case Angle::Source::Param: out << "p" << a.index; break;
                }
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Dense oracle

namespace {

constexpr int kOracleMaxQubits = 10;

Eigen::Matrix2cd to_eigen(const Mat2& m)
{
    Eigen::Matrix2cd out;
    out << m[0], m[1], m[2], m[3];
    return out;
}

// Kronecker product of per-qubit factors, qubit 0 leftmost.
Eigen::MatrixXcd kron_chain(const std::vector<Eigen::Matrix2cd>& factors)
{
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto& f : factors) {
        Eigen::MatrixXcd next = Eigen::kroneckerProduct(out, f).eval();
        out = std::move(next);
    }
    return out;
}

} // namespace

Eigen::MatrixXcd dense_gate_unitary(const GateOp& gate, int n_qubits)
{
    if (n_qubits > kOracleMaxQubits) {
        throw ConfigurationError("dense oracle is limited to 10 qubits");
    }
    validate_gate(gate, n_qubits);
    const auto n = static_cast<std::size_t>(n_qubits);
    const auto dim = Eigen::Index{1} << n_qubits;
    const int target = gate.targets.front();
    std::vector<Eigen::Matrix2cd> factors(n, Eigen::Matrix2cd::Identity());

    if (gate.kind != GateKind::CZ && gate.kind != GateKind::CNOT && gate.kind != GateKind::MCX) {
        factors[static_cast<std::size_t>(target)] = to_eigen(single_qubit_matrix(gate.kind, gate.params));
        return kron_chain(factors);
    }

    // Projector onto "all controls set".
    Eigen::Matrix2cd one = Eigen::Matrix2cd::Zero();
    one(1, 1) = 1.0;
    std::vector<Eigen::Matrix2cd> proj_factors = factors;
    for (int c : gate.controls) {
        proj_factors[static_cast<std::size_t>(c)] = one;
    }
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
    if (gate.kind == GateKind::CZ) {
        proj_factors[static_cast<std::size_t>(target)] = one;
        return identity - 2.0 * kron_chain(proj_factors);
    }
    const Eigen::MatrixXcd projector = kron_chain(proj_factors);
    factors[static_cast<std::size_t>(target)] = to_eigen(single_qubit_matrix(GateKind::X, {}));
    const Eigen::MatrixXcd flip = kron_chain(factors);
    return identity - projector + projector * flip;
}

Eigen::MatrixXcd dense_unitary(std::span<const GateOp> gates, int n_qubits)
{
    if (n_qubits > kOracleMaxQubits) {
        throw ConfigurationError("dense oracle is limited to 10 qubits");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& g : gates) {
        u = (dense_gate_unitary(g, n_qubits) * u).eval();
    }
    return u;
}

Eigen::MatrixXcd dense_unitary_oracle(const CircuitSpec& circuit, const Point& x, std::span<const double> w)
{
    return dense_unitary(bind(circuit, x, w), circuit.n_qubits());
}

} // namespace qpercept
