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

#ifndef SPINPULSE_MPS_H
#define SPINPULSE_MPS_H

#include <array>
#include <cstdint>
#include <vector>

#include "spinpulse/circuit.h"
#include "spinpulse/hardware.h"
#include "spinpulse/integrator.h"
#include "spinpulse/noise.h"

namespace spinpulse {

/// Open-boundary matrix-product state in mixed canonical form. Site q holds one
/// (left bond x right bond) matrix per physical value; sites left of `center()`
/// are left-orthonormal, sites right of it right-orthonormal.
class MpsState {
   public:
    static MpsState zero(int num_qubits, int max_bond = 64, double trunc_tol = 1e-12);

    int num_qubits() const { return static_cast<int>(sites_.size()); }
    int max_bond() const { return max_bond_; }
    double trunc_tol() const { return trunc_tol_; }
    int center() const { return center_; }
    /// Sum of squared singular values dropped by truncation so far.
    double discarded_weight() const { return discarded_; }
    std::vector<int> bond_dimensions() const;
    const std::array<MatX, 2> &site(int q) const { return sites_[static_cast<size_t>(q)]; }

    void apply_one(int q, const Mat2 &u);
    /// Gate on (q, q + 1) in the |q q+1> basis, followed by SVD truncation.
    void apply_two(int q, const Mat4 &u);

    double norm() const;
    /// Dense amplitudes (qubit 0 most significant); for cross-checks on small N.
    VecX to_statevector() const;

   private:
    void move_center(int q);

    std::vector<std::array<MatX, 2>> sites_;
    int max_bond_ = 64;
    double trunc_tol_ = 1e-12;
    int center_ = 0;
    double discarded_ = 0.0;
};

/// Runs an applied circuit on |0...0>. Two-qubit gates must act on (q, q + 1).
MpsState mps_apply(const AppliedCircuit &ac, int max_bond = 64, double trunc_tol = 1e-12);

/// <a|b>, contracted left to right.
cplx overlap(const MpsState &a, const MpsState &b);
/// |<a|b>|^2. Throws SizeMismatch for different qubit counts.
double state_fidelity(const MpsState &a, const MpsState &b);

/// Hadamard on every qubit, then CZ on (0,1), (2,3), ... followed by (1,2), (3,4), ...
Circuit cluster_circuit(int num_qubits);

struct ClusterConfig {
    int num_qubits = 10;
    NoiseParams noise;  ///< duration is overridden to fit all realisations
    HardwareSpecs specs;
    int n_realizations = 200;
    NoiseGating gating;
    int max_bond = 64;
    double trunc_tol = 1e-12;
    int jobs = 1;
};

struct ClusterRecord {
    int num_qubits = 0;
    double t2s = 0.0;
    double mean_fidelity = 0.0;
    double std_error = 0.0;
    int n_realizations = 0;
};

/// Transpiles and schedules the cluster circuit, then averages the fidelity of
/// each noisy realisation against the ideal cluster state.
ClusterRecord cluster_experiment(const ClusterConfig &cfg);

}  // namespace spinpulse

#endif
