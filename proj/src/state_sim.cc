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

#include "spinpulse/state_sim.h"

#include <random>

#include "spinpulse/error.h"
#include "spinpulse/parallel.h"

namespace spinpulse {

namespace {

// Keeps shot streams apart from the noise-trace streams of the same master seed.
constexpr std::uint64_t kShotStreamTag = 1ULL << 34;

}  // namespace

StateVector StateVector::zero(int n) {
    if (n < 1 || n > kMaxStateQubits) {
        throw Error(ErrorCode::TooManyQubits, "statevector supports 1 to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    StateVector s{n, VecX::Zero(1L << n)};
    s.amplitudes(0) = 1.0;
    return s;
}

StateVector apply(const AppliedCircuit &ac, const StateVector &psi0) {
    if (ac.num_qubits != psi0.num_qubits || psi0.amplitudes.size() != (1L << psi0.num_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "circuit and state have different qubit counts");
    }
    StateVector psi = psi0;
    std::span<cplx> amps(psi.amplitudes.data(), static_cast<size_t>(psi.amplitudes.size()));
    for (const auto &layer : ac.layers) {
        for (const auto &g : layer) {
            if (g.targets.size() == 1) {
                apply_one_qubit(amps, psi.num_qubits, g.targets[0], g.unitary);
            } else {
                apply_two_qubit(amps, psi.num_qubits, g.targets[0], g.targets[1], g.unitary);
            }
        }
    }
    return psi;
}

std::uint64_t sample_index(const StateVector &psi, double u) {
    double acc = 0.0;
    const long dim = psi.amplitudes.size();
    const double total = psi.amplitudes.squaredNorm();
    const double target = u * total;
    for (long i = 0; i < dim; ++i) {
        acc += std::norm(psi.amplitudes(i));
        if (target < acc) {
            return static_cast<std::uint64_t>(i);
        }
    }
    // Rounding left the target past the last nonzero amplitude.
    for (long i = dim - 1; i >= 0; --i) {
        if (std::norm(psi.amplitudes(i)) > 0) {
            return static_cast<std::uint64_t>(i);
        }
    }
    return 0;
}

Counts run_experiment(const PulseCircuit &pc, ExperimentalEnvironment &env, int shots, const NoiseGating &gating,
                      std::uint64_t seed, int jobs) {
    if (shots <= 0) {
        throw Error(ErrorCode::InvalidArgument, "number of shots must be positive");
    }
    const int n = pc.num_qubits;
    StateVector zero = StateVector::zero(n);
    const PulseCircuit bare = without_time_traces(pc);
    const int dur = bare.duration();
    const int start = env.cursor();
    env.require_window(start, shots * dur);

    std::vector<int> layout = pc.final_layout;
    if (layout.empty()) {
        for (int q = 0; q < n; ++q) {
            layout.push_back(q);
        }
    }

    std::vector<std::uint64_t> outcomes(static_cast<size_t>(shots));
    parallel_for(shots, jobs, [&](int k) {
        PulseCircuit noisy = with_time_traces(bare, env, start + k * dur);
        StateVector psi = apply(to_circuit(noisy, gating), zero);
        std::mt19937_64 rng(derive_seed(seed, kShotStreamTag | static_cast<std::uint64_t>(k)));
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        outcomes[static_cast<size_t>(k)] = sample_index(psi, u);
    });
    if (shots * dur > 0) {
        env.advance_cursor(shots * dur);
    }

    Counts counts;
    for (std::uint64_t idx : outcomes) {
        std::string bits(static_cast<size_t>(n), '0');
        for (int q = 0; q < n; ++q) {
            const int phys = layout[static_cast<size_t>(q)];
            if ((idx >> (n - 1 - phys)) & 1U) {
                bits[static_cast<size_t>(q)] = '1';
            }
        }
        ++counts[bits];
    }
    return counts;
}

}  // namespace spinpulse
