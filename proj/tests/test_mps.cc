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


#include <gtest/gtest.h>

#include <random>

#include "spinpulse/error.h"
#include "spinpulse/integrator.h"
#include "spinpulse/linalg.h"
#include "spinpulse/mps.h"
#include "spinpulse/noise.h"
#include "spinpulse/pulse.h"
#include "spinpulse/state_sim.h"
#include "spinpulse/transpiler.h"

namespace spinpulse {
namespace {

AppliedCircuit ideal_applied(const Circuit &c) {
    AppliedCircuit ac;
    ac.num_qubits = c.num_qubits;
    for (const auto &g : c.gates) {
        ac.layers.push_back({AppliedGate{g.qubits, gate_matrix(g)}});
    }
    return ac;
}

TEST(Mps, ZeroStateBasics) {
    MpsState s = MpsState::zero(4);
    EXPECT_EQ(s.num_qubits(), 4);
    EXPECT_EQ(s.bond_dimensions(), (std::vector<int>{1, 1, 1}));
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);
    VecX v = s.to_statevector();
    EXPECT_EQ(v(0), cplx(1.0));
    EXPECT_NEAR(v.norm(), 1.0, 1e-15);
}

TEST(Mps, ClusterCircuitLayout) {
    Circuit c = cluster_circuit(5);
    ASSERT_EQ(c.gates.size(), 9u);
    EXPECT_EQ(c.gates[5].qubits, (std::vector<int>{0, 1}));
    EXPECT_EQ(c.gates[7].qubits, (std::vector<int>{1, 2}));
}

TEST(Mps, RandomCircuitsMatchDense) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ang(-3, 3);
    for (int n = 2; n <= 7; ++n) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        Circuit c{n, {}};
        for (int k = 0; k < 40; ++k) {
            int q = pick(rng);
            if (k % 3 == 0 && q + 1 < n) {
                c.gates.push_back(make_gate(k % 2 ? GateKind::CX : GateKind::RZZ, {q + 1, q}, ang(rng)));
            } else {
                c.gates.push_back(make_gate(k % 2 ? GateKind::RX : GateKind::RY, {q}, ang(rng)));
            }
        }
        AppliedCircuit ac = ideal_applied(c);
        VecX dense = apply(ac, StateVector::zero(n)).amplitudes;
        MpsState mps = mps_apply(ac);
        EXPECT_LT((mps.to_statevector() - dense).norm(), 1e-10) << n;
        EXPECT_NEAR(mps.norm(), 1.0, 1e-12);
    }
}

TEST(Mps, BondCapTruncates) {
    Circuit c{8, {}};
    for (int q = 0; q < 8; ++q) {
        c.gates.push_back(make_gate(GateKind::RY, {q}, 0.3 + 0.2 * q));
    }
    for (int layer = 0; layer < 6; ++layer) {
        for (int q = layer % 2; q + 1 < 8; q += 2) {
            c.gates.push_back(make_gate(GateKind::RZZ, {q, q + 1}, 0.9));
            c.gates.push_back(make_gate(GateKind::RX, {q}, 0.5));
        }
    }
    MpsState capped = mps_apply(ideal_applied(c), 2, 0.0);
    for (int d : capped.bond_dimensions()) {
        EXPECT_LE(d, 2);
    }
    EXPECT_GT(capped.discarded_weight(), 0.0);
    EXPECT_NEAR(capped.norm(), 1.0, 1e-12);
    MpsState exact = mps_apply(ideal_applied(c));
    EXPECT_LT(exact.discarded_weight(), 1e-10);
    EXPECT_LT(state_fidelity(capped, exact), 1.0);
}

TEST(Mps, OverlapAndErrors) {
    Circuit c{3, {make_gate(GateKind::X, {1})}};
    MpsState a = mps_apply(ideal_applied(c));
    MpsState b = MpsState::zero(3);
    EXPECT_NEAR(state_fidelity(a, b), 0.0, 1e-15);
    EXPECT_NEAR(state_fidelity(a, a), 1.0, 1e-15);
    EXPECT_THROW(overlap(a, MpsState::zero(2)), Error);
    AppliedCircuit far;
    far.num_qubits = 3;
    far.layers.push_back({AppliedGate{{0, 2}, MatX::Identity(4, 4)}});
    EXPECT_THROW(mps_apply(far), Error);
}

TEST(Mps, NoisyPulseCircuitMatchesDense) {
    HardwareSpecs s;
    s.num_qubits = 6;
    Circuit c = cluster_circuit(6);
    PulseCircuit pc = schedule(gate_transpile(c, s), s);
    NoiseParams np;
    np.type = NoiseType::Pink;
    np.t2s = 200;
    np.tjs = 400;
    np.duration = 1 << 13;
    np.segment_duration = 1 << 13;
    auto env = ExperimentalEnvironment::generate(np, s);
    AppliedCircuit ac = to_circuit(with_time_traces(pc, env, 0));
    VecX dense = apply(ac, StateVector::zero(6)).amplitudes;
    EXPECT_LT((mps_apply(ac).to_statevector() - dense).norm(), 1e-10);
}

TEST(Mps, ClusterExperimentIsDeterministic) {
    ClusterConfig cfg;
    cfg.num_qubits = 4;
    cfg.noise.type = NoiseType::Quasistatic;
    cfg.noise.t2s = 5000;
    cfg.noise.segment_duration = 1 << 10;
    cfg.n_realizations = 6;
    ClusterRecord a = cluster_experiment(cfg);
    cfg.jobs = 3;
    ClusterRecord b = cluster_experiment(cfg);
    EXPECT_EQ(a.mean_fidelity, b.mean_fidelity);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_GT(a.mean_fidelity, 0.5);
    EXPECT_LE(a.mean_fidelity, 1.0 + 1e-12);
    EXPECT_EQ(a.n_realizations, 6);
}

}  // namespace
}  // namespace spinpulse
