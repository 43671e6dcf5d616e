// Copyright 2026 The SpinPulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinpulse/linalg.h"

#include <cassert>
#include <cmath>

namespace spinpulse {

namespace pauli {

Mat2 identity() { return Mat2::Identity(); }

Mat2 x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 y() {
    Mat2 m;
    m << 0, -kI, kI, 0;
    return m;
}

Mat2 z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat2 by_index(int k) {
    switch (k) {
        case 0:
            return identity();
        case 1:
            return x();
        case 2:
            return y();
        default:
            return z();
    }
}

MatX string(int index, int num_qubits) {
    MatX out = MatX::Identity(1, 1);
    for (int q = 0; q < num_qubits; ++q) {
        int shift = 2 * (num_qubits - 1 - q);
        out = kron(out, by_index((index >> shift) & 3));
    }
    return out;
}

}  // namespace pauli

MatX kron(const MatX &a, const MatX &b) {
    MatX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Mat2 rx(double theta) {
    return std::cos(theta / 2) * pauli::identity() - kI * std::sin(theta / 2) * pauli::x();
}

Mat2 ry(double theta) {
    return std::cos(theta / 2) * pauli::identity() - kI * std::sin(theta / 2) * pauli::y();
}

Mat2 rz(double theta) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::exp(-kI * (theta / 2));
    m(1, 1) = std::exp(kI * (theta / 2));
    return m;
}

Mat4 rzz(double theta) {
    Mat4 m = Mat4::Zero();
    cplx even = std::exp(-kI * (theta / 2));
    cplx odd = std::exp(kI * (theta / 2));
    m(0, 0) = even;
    m(1, 1) = odd;
    m(2, 2) = odd;
    m(3, 3) = even;
    return m;
}

double phase_insensitive_overlap(const MatX &a, const MatX &b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double process_fidelity(const MatX &u0, const MatX &u) {
    double overlap = phase_insensitive_overlap(u0, u);
    return overlap * overlap;
}

double unitarity_error(const MatX &u) {
    MatX d = u.adjoint() * u - MatX::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

void apply_one_qubit(std::span<cplx> state, int num_qubits, int q, const Mat2 &op) {
    const size_t stride = size_t{1} << (num_qubits - 1 - q);
    const size_t dim = state.size();
    for (size_t base = 0; base < dim; base += 2 * stride) {
        for (size_t k = base; k < base + stride; ++k) {
            cplx a0 = state[k];
            cplx a1 = state[k + stride];
            state[k] = op(0, 0) * a0 + op(0, 1) * a1;
            state[k + stride] = op(1, 0) * a0 + op(1, 1) * a1;
        }
    }
}

void apply_two_qubit(std::span<cplx> state, int num_qubits, int q0, int q1, const Mat4 &op) {
    const size_t b0 = size_t{1} << (num_qubits - 1 - q0);
    const size_t b1 = size_t{1} << (num_qubits - 1 - q1);
    const size_t dim = state.size();
    for (size_t k = 0; k < dim; ++k) {
        if ((k & b0) || (k & b1)) {
            continue;
        }
        const size_t idx[4] = {k, k | b1, k | b0, k | b0 | b1};
        cplx in[4];
        for (int r = 0; r < 4; ++r) {
            in[r] = state[idx[r]];
        }
        for (int r = 0; r < 4; ++r) {
            state[idx[r]] = op(r, 0) * in[0] + op(r, 1) * in[1] + op(r, 2) * in[2] + op(r, 3) * in[3];
        }
    }
}

void apply_one_qubit(MatX &m, int num_qubits, int q, const Mat2 &op) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        apply_one_qubit(std::span<cplx>(m.col(c).data(), static_cast<size_t>(m.rows())), num_qubits, q, op);
    }
}

void apply_two_qubit(MatX &m, int num_qubits, int q0, int q1, const Mat4 &op) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        apply_two_qubit(std::span<cplx>(m.col(c).data(), static_cast<size_t>(m.rows())), num_qubits, q0, q1, op);
    }
}

}  // namespace spinpulse
