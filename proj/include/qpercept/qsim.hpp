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

// Dense statevector simulation for few-qubit circuits.
//
// Qubit 0 is the most significant bit of the basis index: for n qubits the
// amplitude of |b_0 b_1 ... b_{n-1}> lives at index sum_q b_q << (n - 1 - q).

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qpercept {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

inline constexpr int kMaxQubits = 20;

enum class GateKind { RX, RY, RZ, ROT, H, CZ, CNOT, MCX, X };

std::string_view gate_name(GateKind kind);

/// Number of real angles a gate kind carries (ROT: 3, RX/RY/RZ: 1, others 0).
int angle_count(GateKind kind);

/// True for the gate kinds with a Pauli generator per angle (RX, RY, RZ, ROT).
bool is_rotation(GateKind kind);

struct GateOp {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<double> params;

    static GateOp rx(int q, double angle) { return {GateKind::RX, {q}, {}, {angle}}; }
    static GateOp ry(int q, double angle) { return {GateKind::RY, {q}, {}, {angle}}; }
    static GateOp rz(int q, double angle) { return {GateKind::RZ, {q}, {}, {angle}}; }
    // Rot(phi, theta, omega) = Rz(omega) Ry(theta) Rz(phi)
    static GateOp rot(int q, double phi, double theta, double omega)
    {
        return {GateKind::ROT, {q}, {}, {phi, theta, omega}};
    }
    static GateOp h(int q) { return {GateKind::H, {q}, {}, {}}; }
    static GateOp x(int q) { return {GateKind::X, {q}, {}, {}}; }
    static GateOp cz(int a, int b) { return {GateKind::CZ, {b}, {a}, {}}; }
    static GateOp cnot(int control, int target) { return {GateKind::CNOT, {target}, {control}, {}}; }
    static GateOp mcx(std::vector<int> controls, int target)
    {
        return {GateKind::MCX, {target}, std::move(controls), {}};
    }
};

/// Throws StructuralError / ConfigurationError if the op is not executable on n qubits.
void validate_gate(const GateOp& gate, int n_qubits);

/// 2x2 matrix of a single-qubit gate kind (RX, RY, RZ, ROT, H, X).
Mat2 single_qubit_matrix(GateKind kind, std::span<const double> params);

Mat2 rx_matrix(double angle);
Mat2 ry_matrix(double angle);
Mat2 rz_matrix(double angle);
Mat2 rot_matrix(double phi, double theta, double omega);
Mat2 multiply(const Mat2& a, const Mat2& b);

class QuantumState {
  public:
    /// |0...0> on n qubits; 1 <= n <= kMaxQubits.
    explicit QuantumState(int n_qubits);

    /// Length must be a power of two within the qubit limit. No renormalization.
    static QuantumState from_amplitudes(std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    void apply(const GateOp& gate);

    // Raw kernels. Callers guarantee indices are in range.
    void apply_matrix(int target, const Mat2& m);
    void apply_controlled_x(std::uint64_t control_mask, int target);
    /// Negates every amplitude whose index has all bits of `mask` set.
    void apply_phase_flip(std::uint64_t mask);

    double expectation_z(int qubit) const;
    std::vector<double> probabilities(std::span<const int> qubits) const;
    double norm_squared() const;

    std::uint64_t bit(int qubit) const { return std::uint64_t{1} << (n_qubits_ - 1 - qubit); }

  private:
    QuantumState() = default;

    int n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

QuantumState new_state(int n_qubits);
QuantumState apply_gate(QuantumState state, const GateOp& gate);
double expectation_z(const QuantumState& state, int qubit);

/// Marginal distribution over `qubits`; entry index uses qubits[0] as the most significant bit.
std::vector<double> probability_vector(const QuantumState& state, std::span<const int> qubits);

} // namespace qpercept
