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

#include "qpercept/qsim.hpp"

#include "qpercept/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qpercept {

std::string_view gate_name(GateKind kind)
{
    switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::ROT: return "ROT";
    case GateKind::H: return "H";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::MCX: return "MCX";
    case GateKind::X: return "X";
    }
    return "?";
}

int angle_count(GateKind kind)
{
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: return 1;
    case GateKind::ROT: return 3;
    default: return 0;
    }
}

bool is_rotation(GateKind kind) { return angle_count(kind) > 0; }

namespace {

std::size_t expected_controls(GateKind kind, std::size_t given)
{
    switch (kind) {
    case GateKind::CZ:
    case GateKind::CNOT: return 1;
    case GateKind::MCX: return std::max<std::size_t>(given, 1);
    default: return 0;
    }
}

} // namespace

void validate_gate(const GateOp& gate, int n_qubits)
{
    const auto name = std::string(gate_name(gate.kind));
    if (gate.params.size() != static_cast<std::size_t>(angle_count(gate.kind))) {
        throw ConfigurationError(name + " expects " + std::to_string(angle_count(gate.kind)) +
                                 " angle(s), got " + std::to_string(gate.params.size()));
    }
    if (gate.targets.size() != 1) {
        throw StructuralError(name + " expects exactly one target qubit");
    }
    if (gate.controls.size() != expected_controls(gate.kind, gate.controls.size())) {
        throw StructuralError(name + " has the wrong number of control qubits");
    }
    std::vector<int> wires = gate.controls;
    wires.push_back(gate.targets.front());
    for (int q : wires) {
        if (q < 0 || q >= n_qubits) {
            throw StructuralError(name + " qubit index " + std::to_string(q) + " outside [0, " +
                                  std::to_string(n_qubits) + ")");
        }
    }
    std::sort(wires.begin(), wires.end());
    if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
        throw StructuralError(name + " targets and controls must be distinct");
    }
}

Mat2 rx_matrix(double angle)
{
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
}

Mat2 ry_matrix(double angle)
{
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}

Mat2 rz_matrix(double angle)
{
    const Complex phase = std::polar(1.0, angle / 2);
    return {std::conj(phase), Complex{0, 0}, Complex{0, 0}, phase};
}

Mat2 multiply(const Mat2& a, const Mat2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 rot_matrix(double phi, double theta, double omega)
{
    // Rz(omega) Ry(theta) Rz(phi), expanded.
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const double sum = (phi + omega) / 2;
    const double diff = (phi - omega) / 2;
    return {std::polar(c, -sum), -std::polar(s, diff), std::polar(s, -diff), std::polar(c, sum)};
}

Mat2 single_qubit_matrix(GateKind kind, std::span<const double> params)
{
    if (params.size() != static_cast<std::size_t>(angle_count(kind))) {
        throw ConfigurationError(std::string(gate_name(kind)) + ": wrong number of angles");
    }
    const double r = std::numbers::sqrt2 / 2;
    switch (kind) {
    case GateKind::RX: return rx_matrix(params[0]);
    case GateKind::RY: return ry_matrix(params[0]);
    case GateKind::RZ: return rz_matrix(params[0]);
    case GateKind::ROT: return rot_matrix(params[0], params[1], params[2]);
    case GateKind::H: return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
    case GateKind::X: return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
    default:
        throw StructuralError(std::string(gate_name(kind)) + " is not a single-qubit gate");
    }
}

QuantumState::QuantumState(int n_qubits) : n_qubits_(n_qubits)
{
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                                 std::to_string(kMaxQubits) + "]");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0, 0});
    amplitudes_[0] = Complex{1, 0};
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes)
{
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim) || dim > (std::size_t{1} << kMaxQubits)) {
        throw ConfigurationError("amplitude count must be a power of two between 2 and 2^20");
    }
    QuantumState state;
    state.n_qubits_ = std::countr_zero(dim);
    state.amplitudes_ = std::move(amplitudes);
    return state;
}

void QuantumState::apply(const GateOp& gate)
{
    validate_gate(gate, n_qubits_);
    const int target = gate.targets.front();
    std::uint64_t control_mask = 0;
    for (int c : gate.controls) {
        control_mask |= bit(c);
    }
    switch (gate.kind) {
    case GateKind::CZ: apply_phase_flip(control_mask | bit(target)); break;
    case GateKind::CNOT:
    case GateKind::MCX: apply_controlled_x(control_mask, target); break;
    default: apply_matrix(target, single_qubit_matrix(gate.kind, gate.params)); break;
    }
}

void QuantumState::apply_matrix(int target, const Mat2& m)
{
    const std::size_t stride = bit(target);
    const std::size_t dim = amplitudes_.size();
    // Expanded by hand: std::complex operator* carries inf/nan recovery that dominates runtime.
    const double m0r = m[0].real(), m0i = m[0].imag(), m1r = m[1].real(), m1i = m[1].imag();
    const double m2r = m[2].real(), m2i = m[2].imag(), m3r = m[3].real(), m3i = m[3].imag();
    auto* a = reinterpret_cast<double*>(amplitudes_.data());
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            double* p0 = a + 2 * k;
            double* p1 = a + 2 * (k + stride);
            const double x0 = p0[0], y0 = p0[1], x1 = p1[0], y1 = p1[1];
            p0[0] = m0r * x0 - m0i * y0 + m1r * x1 - m1i * y1;
            p0[1] = m0r * y0 + m0i * x0 + m1r * y1 + m1i * x1;
            p1[0] = m2r * x0 - m2i * y0 + m3r * x1 - m3i * y1;
            p1[1] = m2r * y0 + m2i * x0 + m3r * y1 + m3i * x1;
        }
    }
}

void QuantumState::apply_controlled_x(std::uint64_t control_mask, int target)
{
    const std::uint64_t t = bit(target);
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & control_mask) == control_mask && (i & t) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | t]);
        }
    }
}

void QuantumState::apply_phase_flip(std::uint64_t mask)
{
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
}

double QuantumState::expectation_z(int qubit) const
{
    if (qubit < 0 || qubit >= n_qubits_) {
        throw StructuralError("qubit index " + std::to_string(qubit) + " out of range");
    }
    const std::uint64_t b = bit(qubit);
    double result = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const double re = amplitudes_[i].real();
        const double im = amplitudes_[i].imag();
        const double p = re * re + im * im;
        result += (i & b) ? -p : p;
    }
    return result;
}

std::vector<double> QuantumState::probabilities(std::span<const int> qubits) const
{
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw StructuralError("probability_vector: duplicate qubit index");
    }
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw StructuralError("qubit index " + std::to_string(q) + " out of range");
        }
    }
    const std::size_t k = qubits.size();
    std::vector<double> out(std::size_t{1} << k, 0.0);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        std::size_t sub = 0;
        for (std::size_t j = 0; j < k; ++j) {
            sub = (sub << 1) | ((i & bit(qubits[j])) ? 1U : 0U);
        }
        out[sub] += std::norm(amplitudes_[i]);
    }
    return out;
}

double QuantumState::norm_squared() const
{
    double total = 0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

QuantumState new_state(int n_qubits) { return QuantumState(n_qubits); }

QuantumState apply_gate(QuantumState state, const GateOp& gate)
{
    state.apply(gate);
    return state;
}

double expectation_z(const QuantumState& state, int qubit) { return state.expectation_z(qubit); }

std::vector<double> probability_vector(const QuantumState& state, std::span<const int> qubits)
{
    return state.probabilities(qubits);
}

} // namespace qpercept
