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

#ifndef SPINPULSE_INTEGRATOR_H
#define SPINPULSE_INTEGRATOR_H

#include <vector>

#include "json.hpp"
#include "spinpulse/linalg.h"
#include "spinpulse/pulse.h"

namespace spinpulse {

/// Which attached noise the integrator uses. With `noise_during_drive` off the
/// qubit noise is suppressed on steps where that qubit's B field is nonzero.
struct NoiseGating {
    bool qubit_noise_on = true;
    bool exchange_noise_on = true;
    bool noise_during_drive = true;

    static NoiseGating all_off() { return {false, false, false}; }
};

struct AppliedGate {
    std::vector<int> targets;  ///< one qubit, or (lo, lo + 1)
    MatX unitary;
};

/// Gate-level image of a pulse circuit: one unitary per qubit or coupled pair and layer.
struct AppliedCircuit {
    int num_qubits = 1;
    std::vector<std::vector<AppliedGate>> layers;
    std::vector<int> initial_layout;
    std::vector<int> final_layout;
};

enum class PairMethod {
    Auto,           ///< block formula when no transverse drive acts on the pair
    Eigendecompose  ///< Hermitian eigendecomposition of the full 4x4 Hamiltonian
};

/// Time-ordered product of exp(-i h(t)) for a single-qubit sequence, with
/// h = B/2 (cos(phi) X + sin(phi) Y) + (d_omega + eps)/2 Z.
Mat2 integrate_sequence(const PulseSequence &seq, const NoiseGating &gating = {});

/// Propagator of a coupled pair over one layer: exchange from `pair` plus the
/// co-scheduled single-qubit sequences of both qubits. `j_max` scales exchange noise.
Mat4 integrate_pair(const PulseSequence &pair, const PulseSequence &lo, const PulseSequence &hi,
                    const NoiseGating &gating, double j_max, PairMethod method = PairMethod::Auto);

/// Integrates every sequence of every layer.
AppliedCircuit to_circuit(const PulseCircuit &pc, const NoiseGating &gating = {});

/// Diagonal adiabatic prediction for a noiseless pair block: the unperturbed
/// diagonal Hamiltonian plus the Stark shift J^2 / (2 Delta) (Z_lo - Z_hi).
Mat4 adiabatic_oracle(const PulseSequence &pair, const PulseSequence &lo, const PulseSequence &hi);

/// Dense 2^N x 2^N product of all gates (physical qubit order, layouts ignored).
MatX applied_unitary(const AppliedCircuit &ac);

/// {"num_qubits", "initial_layout", "final_layout", "layers": [[{"targets", "unitary"}]]}
/// with each unitary as row-major [re, im] pairs.
nlohmann::json applied_to_json(const AppliedCircuit &ac);

}  // namespace spinpulse

#endif
