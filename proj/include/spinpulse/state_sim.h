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

#ifndef SPINPULSE_STATE_SIM_H
#define SPINPULSE_STATE_SIM_H

#include <cstdint>
#include <map>
#include <string>

#include "spinpulse/integrator.h"
#include "spinpulse/noise.h"

namespace spinpulse {

inline constexpr int kMaxStateQubits = 24;

struct StateVector {
    int num_qubits = 1;
    VecX amplitudes;

    /// |0...0> on n qubits.
    static StateVector zero(int n);
    double norm() const { return amplitudes.norm(); }
};

/// Bitstring (qubit 0 first) to number of shots.
using Counts = std::map<std::string, long>;

/// Applies every gate of `ac` in layer order. Throws DimensionMismatch if sizes differ.
StateVector apply(const AppliedCircuit &ac, const StateVector &psi0);

/// Draws one basis index with probability |amplitude|^2 from a uniform variate in [0, 1).
std::uint64_t sample_index(const StateVector &psi, double u);

/// `shots` independent noisy realisations, each measured once. Shot k reads the
/// noise window at cursor + k * duration and draws its outcome from a generator
/// seeded from `seed` and k. Physical outcomes are mapped back to logical
/// qubits through the final layout. Counts do not depend on `jobs`.
Counts run_experiment(const PulseCircuit &pc, ExperimentalEnvironment &env, int shots, const NoiseGating &gating,
                      std::uint64_t seed, int jobs = 1);

}  // namespace spinpulse

#endif
