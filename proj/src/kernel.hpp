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

// Allocation-free evaluation path shared by forward() and the gradient code.
// Validation happens once in CircuitSpec's constructor, so nothing here checks indices.

#include "qpercept/circuits.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qpercept::detail {

struct ResolvedOp {
    GateKind kind = GateKind::X;
    int target = 0;
    std::uint64_t mask = 0; // control bits (CNOT/MCX) or both bits (CZ)
    Mat2 matrix{};          // single-qubit kinds only
};

inline std::uint64_t qubit_bit(int n_qubits, int q) { return std::uint64_t{1} << (n_qubits - 1 - q); }

inline double resolve_angle(const Angle& a, const Point& x, std::span<const double> w)
{
    switch (a.source) {
    case Angle::Source::Data: return x[static_cast<std::size_t>(a.index)];
    case Angle::Source::Param: return w[static_cast<std::size_t>(a.index)];
    case Angle::Source::Constant: break;
    }
    return a.value;
}

/// Matrix of a single-qubit slot op; `shift` is added to angle number `shifted` (or none if < 0).
inline Mat2 slot_matrix(const SlotOp& op, const Point& x, std::span<const double> w,
                        int shifted = -1, double shift = 0.0)
{
    double angles[3] = {0, 0, 0};
    for (std::size_t i = 0; i < op.angles.size(); ++i) {
        angles[i] = resolve_angle(op.angles[i], x, w);
    }
    if (shifted >= 0) {
        angles[shifted] += shift;
    }
    return single_qubit_matrix(op.kind, std::span<const double>(angles, op.angles.size()));
}

inline ResolvedOp resolve(const SlotOp& op, int n_qubits, const Point& x, std::span<const double> w)
{
    ResolvedOp r;
    r.kind = op.kind;
    r.target = op.targets.front();
    for (int c : op.controls) {
        r.mask |= qubit_bit(n_qubits, c);
    }
    switch (op.kind) {
    case GateKind::CZ: r.mask |= qubit_bit(n_qubits, r.target); break;
    case GateKind::CNOT:
    case GateKind::MCX: break;
    default: r.matrix = slot_matrix(op, x, w); break;
    }
    return r;
}

inline void apply(QuantumState& state, const ResolvedOp& op)
{
    switch (op.kind) {
    case GateKind::CZ: state.apply_phase_flip(op.mask); break;
    case GateKind::CNOT:
    case GateKind::MCX: state.apply_controlled_x(op.mask, op.target); break;
    default: state.apply_matrix(op.target, op.matrix); break;
    }
}

inline void resolve_all(const CircuitSpec& circuit, const Point& x, std::span<const double> w,
                        std::vector<ResolvedOp>& out)
{
    out.clear();
    out.reserve(circuit.ops().size());
    for (const auto& op : circuit.ops()) {
        out.push_back(resolve(op, circuit.n_qubits(), x, w));
    }
}

} // namespace qpercept::detail
