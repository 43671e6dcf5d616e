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

#ifndef SPINPULSE_LINALG_H
#define SPINPULSE_LINALG_H

#include <Eigen/Dense>
#include <complex>
#include <span>

namespace spinpulse {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
/// Pauli matrix by index in the order I, X, Y, Z.
Mat2 by_index(int k);
/// Tensor product of single-qubit Paulis; digit for qubit 0 is the most significant.
MatX string(int index, int num_qubits);
}  // namespace pauli

MatX kron(const MatX &a, const MatX &b);

Mat2 rx(double theta);
Mat2 ry(double theta);
Mat2 rz(double theta);
Mat4 rzz(double theta);

/// |Tr(a^dagger b)| / d, which is 1 iff a and b agree up to a global phase.
double phase_insensitive_overlap(const MatX &a, const MatX &b);

/// |Tr(u0^dagger u)|^2 / d^2.
double process_fidelity(const MatX &u0, const MatX &u);

/// max_ij |(U^dagger U - I)_ij|.
double unitarity_error(const MatX &u);

/// Applies a 1- or 2-qubit operator to a state of `num_qubits` qubits in place.
/// Qubit 0 is the most significant bit of the basis index.
void apply_one_qubit(std::span<cplx> state, int num_qubits, int q, const Mat2 &op);
void apply_two_qubit(std::span<cplx> state, int num_qubits, int q0, int q1, const Mat4 &op);

/// Left-multiplies every column of `m` by the embedded operator.
void apply_one_qubit(MatX &m, int num_qubits, int q, const Mat2 &op);
void apply_two_qubit(MatX &m, int num_qubits, int q0, int q1, const Mat4 &op);

}  // namespace spinpulse

#endif
