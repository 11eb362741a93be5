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
// Independent reference implementations used only by the tests: a naive dense
// simulator built from explicit 2x2 matrices and Kronecker products, a cyclic
// Jacobi eigensolver, and central finite differences.

#include "qpercept/circuits.hpp"
#include "qpercept/training.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Matrix = std::vector<std::vector<C>>;

inline Matrix identity(std::size_t n)
{
    Matrix m(n, std::vector<C>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b)
{
    const std::size_t ra = a.size(), rb = b.size();
    Matrix out(ra * rb, std::vector<C>(ra * rb, 0.0));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < rb; ++l)
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    Matrix out(n, std::vector<C>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != C(0.0))
                for (std::size_t j = 0; j < n; ++j)
                    out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline std::vector<C> matvec(const Matrix& m, const std::vector<C>& v)
{
    std::vector<C> out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
    return out;
}

// Textbook matrices, composed rather than expanded.
inline Matrix rx(double t)
{
    return {{std::cos(t / 2), C(0, -std::sin(t / 2))}, {C(0, -std::sin(t / 2)), std::cos(t / 2)}};
}
inline Matrix ry(double t) { return {{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}}; }
inline Matrix rz(double t) { return {{std::exp(C(0, -t / 2)), 0.0}, {0.0, std::exp(C(0, t / 2))}}; }
inline Matrix hadamard()
{
    const double r = 1 / std::sqrt(2.0);
    return {{r, r}, {r, -r}};
}
inline Matrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

inline Matrix single(const qpercept::GateOp& g)
{
    using K = qpercept::GateKind;
    switch (g.kind) {
    case K::RX: return rx(g.params[0]);
    case K::RY: return ry(g.params[0]);
    case K::RZ: return rz(g.params[0]);
    case K::ROT: return matmul(rz(g.params[2]), matmul(ry(g.params[1]), rz(g.params[0])));
    case K::H: return hadamard();
    case K::X: return pauli_x();
    default: return identity(2);
    }
}

// Operator acting as `m` on qubit q (qubit 0 is the leftmost tensor factor).
inline Matrix embed(const Matrix& m, int q, int n)
{
    Matrix out = identity(1);
    for (int k = 0; k < n; ++k) {
        out = kron(out, k == q ? m : identity(2));
    }
    return out;
}

// Controlled gates written as sums over computational basis states.
inline Matrix controlled(const qpercept::GateOp& g, int n)
{
    const std::size_t dim = std::size_t{1} << n;
    auto bit = [n](std::size_t i, int q) { return (i >> (n - 1 - q)) & 1U; };
    Matrix out(dim, std::vector<C>(dim, 0.0));
    const int t = g.targets.front();
    for (std::size_t i = 0; i < dim; ++i) {
        bool on = true;
        for (int c : g.controls) {
            on = on && bit(i, c) == 1;
        }
        if (g.kind == qpercept::GateKind::CZ) {
            out[i][i] = (on && bit(i, t) == 1) ? -1.0 : 1.0;
        } else {
            const std::size_t j = on ? i ^ (std::size_t{1} << (n - 1 - t)) : i;
            out[j][i] = 1.0;
        }
    }
    return out;
}

inline Matrix gate_matrix(const qpercept::GateOp& g, int n)
{
    using K = qpercept::GateKind;
    if (g.kind == K::CZ || g.kind == K::CNOT || g.kind == K::MCX) {
        return controlled(g, n);
    }
    return embed(single(g), g.targets.front(), n);
}

inline std::vector<C> simulate(std::span<const qpercept::GateOp> gates, int n)
{
    std::vector<C> v(std::size_t{1} << n, 0.0);
    v[0] = 1.0;
    for (const auto& g : gates) {
        v = matvec(gate_matrix(g, n), v);
    }
    return v;
}

inline double expectation_z(const std::vector<C>& v, int q, int n)
{
    double r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        r += (((i >> (n - 1 - q)) & 1U) ? -1.0 : 1.0) * std::norm(v[i]);
    }
    return r;
}

// Random gate drawn from every kind the simulator supports.
inline qpercept::GateOp random_gate(int n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    std::vector<int> wires(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        wires[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(wires.begin(), wires.end(), rng);
    const int choices = n >= 2 ? 9 : 6;
    const int pick = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    switch (pick) {
    case 0: return qpercept::GateOp::rx(wires[0], angle(rng));
    case 1: return qpercept::GateOp::ry(wires[0], angle(rng));
    case 2: return qpercept::GateOp::rz(wires[0], angle(rng));
    case 3: return qpercept::GateOp::rot(wires[0], angle(rng), angle(rng), angle(rng));
    case 4: return qpercept::GateOp::h(wires[0]);
    case 5: return qpercept::GateOp::x(wires[0]);
    case 6: return qpercept::GateOp::cz(wires[0], wires[1]);
    case 7: return qpercept::GateOp::cnot(wires[0], wires[1]);
    default: {
        const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
        return qpercept::GateOp::mcx(std::vector<int>(wires.begin() + 1, wires.begin() + 1 + k), wires[0]);
    }
    }
}

// Cyclic Jacobi rotations on a symmetric 4x4 matrix. Returns eigenvalues in
// descending order with the matching unit eigenvectors.
struct Eigen4 {
    std::array<double, 4> values{};
    std::array<std::array<double, 4>, 4> vectors{};
};

inline Eigen4 jacobi(std::array<std::array<double, 4>, 4> a)
{
    std::array<std::array<double, 4>, 4> v{};
    for (int i = 0; i < 4; ++i) {
        v[i][i] = 1;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-30) {
            break;
        }
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (a[p][q] == 0) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });
    Eigen4 out;
    for (int r = 0; r < 4; ++r) {
        out.values[r] = a[order[r]][order[r]];
        for (int k = 0; k < 4; ++k) {
            out.vectors[r][k] = v[k][order[r]];
        }
    }
    return out;
}

// Sample covariance with n - 1 normalization, formed explicitly.
inline std::array<std::array<double, 4>, 4> covariance(std::span<const std::array<double, 4>> rows)
{
    std::array<double, 4> mean{};
    for (const auto& r : rows)
        for (int k = 0; k < 4; ++k)
            mean[k] += r[k] / static_cast<double>(rows.size());
    std::array<std::array<double, 4>, 4> c{};
    for (const auto& r : rows)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                c[i][j] += (r[i] - mean[i]) * (r[j] - mean[j]) / static_cast<double>(rows.size() - 1);
    return c;
}

// Central finite differences of the loss.
inline std::vector<double> finite_difference(const qpercept::CircuitSpec& circuit, std::vector<double> w,
                                             std::span<const qpercept::Point> points,
                                             std::span<const double> targets, double h = 1e-5)
{
    std::vector<double> g(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double w0 = w[i];
        w[i] = w0 + h;
        const double up = qpercept::loss(circuit, w, points, targets);
        w[i] = w0 - h;
        const double down = qpercept::loss(circuit, w, points, targets);
        w[i] = w0;
        g[i] = (up - down) / (2 * h);
    }
    return g;
}

// Direct evaluation of sum p log(p / q).
inline double kl(std::span<const double> p, std::span<const double> q)
{
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += p[i] * std::log(p[i] / q[i]);
    }
    return s;
}

} // namespace oracle
