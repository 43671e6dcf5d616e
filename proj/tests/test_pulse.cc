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

#include <cmath>
#include <numbers>
#include <random>

#include "spinpulse/error.h"
#include "spinpulse/integrator.h"
#include "spinpulse/linalg.h"
#include "spinpulse/noise.h"
#include "spinpulse/pulse.h"
#include "spinpulse/schedule_io.h"
#include "spinpulse/transpiler.h"

namespace spinpulse {
namespace {

constexpr double kPi = std::numbers::pi;

HardwareSpecs square_specs(int n = 2) {
    HardwareSpecs s;
    s.num_qubits = n;
    s.shape = PulseShape::Square;
    return s;
}

HardwareSpecs gaussian_specs(int n = 2) {
    HardwareSpecs s;
    s.num_qubits = n;
    return s;
}

PulseSequence idle_only(int t) { return PulseSequence{{0}, {Idle{t}}, std::nullopt}; }

TEST(FromAngle, SquarePiPulse) {
    auto r = from_angle(Axis::X, kPi, square_specs());
    ASSERT_TRUE(r);
    EXPECT_EQ(r->duration(), 11);
    for (double w : r->waveform) {
        EXPECT_NEAR(w, kPi / 11, 1e-15);
    }
    EXPECT_NEAR(r->area(), kPi, 1e-14);
}

TEST(FromAngle, GaussianAreaAndCeiling) {
    const HardwareSpecs s = gaussian_specs();
    for (double theta : {kPi, kPi / 2, 0.01, 3.0, 7.5}) {
        auto r = from_angle(Axis::X, theta, s);
        ASSERT_TRUE(r);
        EXPECT_NEAR(r->area(), theta, 1e-13);
        for (double w : r->waveform) {
            EXPECT_LE(w, s.b_max * (1 + 1e-12));
        }
        // One step shorter must break the amplitude ceiling.
        int plateau = r->duration() - 2 * s.ramp_duration;
        if (plateau > 0) {
            auto unit = shape_samples(s.shape, 1.0, plateau - 1, s.ramp_duration);
            double sum = 0;
            for (double u : unit) {
                sum += u;
            }
            EXPECT_GT(theta / sum, s.b_max);
        }
    }
}

TEST(FromAngle, SignConventions) {
    const HardwareSpecs s = square_specs();
    EXPECT_FALSE(from_angle(Axis::Z, 0.0, s));
    auto z = from_angle(Axis::Z, -0.5, s);
    EXPECT_NEAR(z->area(), -0.5, 1e-15);
    auto x = from_angle(Axis::X, -kPi / 2, s);
    EXPECT_NEAR(x->area(), 1.5 * kPi, 1e-14);
    auto y = from_angle(Axis::Y, 1.0, s);
    EXPECT_DOUBLE_EQ(y->phase, kPi / 2);
    EXPECT_THROW(from_angle(Axis::X, NAN, s), Error);
}

TEST(FromAngle, RotationsIntegrateToGates) {
    const HardwareSpecs s = gaussian_specs();
    const double theta = 1.234;
    auto check = [&](Axis axis, const Mat2 &expected) {
        auto r = from_angle(axis, theta, s);
        Mat2 u = integrate_sequence(PulseSequence{{0}, {*r}, std::nullopt});
        EXPECT_NEAR(process_fidelity(u, expected), 1.0, 1e-12) << axis_name(axis);
    };
    check(Axis::X, rx(theta));
    check(Axis::Y, ry(theta));
    check(Axis::Z, rz(theta));
}

TEST(ExchangePulse, AreaAndBound) {
    const HardwareSpecs s = gaussian_specs();
    for (double theta : {kPi / 4, -kPi / 4, 0.05, 2.0}) {
        Rotation r = adiabatic_exchange_pulse(theta, s);
        EXPECT_EQ(r.axis, Axis::ZZ);
        EXPECT_NEAR(r.area(), theta, 1e-13);
        for (double w : r.waveform) {
            EXPECT_LE(std::abs(w), s.j_max);
        }
        EXPECT_LT(std::abs(r.waveform.front()), 1e-4 * s.j_max);
    }
}

TEST(TwoQubitBlock, PlateausAndMargins) {
    const HardwareSpecs s = gaussian_specs();
    auto block = build_two_qubit_sequence(0, 1, kPi / 4, s);
    ASSERT_TRUE(block);
    const auto &inst = block->pair.instructions;
    ASSERT_EQ(inst.size(), 3u);
    EXPECT_GE(std::get<Idle>(inst[0]).duration, s.ramp_duration);
    EXPECT_GE(std::get<Idle>(inst[2]).duration, s.ramp_duration);
    EXPECT_NEAR(std::get<Rotation>(inst[1]).area(), kPi / 4, 1e-14);
    EXPECT_EQ(block->detuning_lo.duration(), block->pair.duration());
    EXPECT_EQ(block->detuning_hi.duration(), block->pair.duration());
    const auto &lo = std::get<Rotation>(block->detuning_lo.instructions[0]).waveform;
    const auto &hi = std::get<Rotation>(block->detuning_hi.instructions[0]).waveform;
    EXPECT_DOUBLE_EQ(lo[lo.size() / 2], s.delta_max / 2);
    EXPECT_DOUBLE_EQ(hi[hi.size() / 2], -s.delta_max / 2);

    EXPECT_FALSE(build_two_qubit_sequence(0, 1, 0.0, s));
    EXPECT_THROW(build_two_qubit_sequence(0, 2, 0.1, s), Error);
}

TEST(DynamicalDecoupling, SpinEchoPlacement) {
    HardwareSpecs s = square_specs(1);
    s.dd_mode = DDMode::SpinEcho;
    PulseSequence out = apply_dd(idle_only(100), s);
    EXPECT_EQ(out.duration(), 100);
    std::vector<int> centres;
    int t = 0;
    for (const auto &inst : out.instructions) {
        if (const auto *r = std::get_if<Rotation>(&inst)) {
            EXPECT_EQ(r->duration(), 11);
            centres.push_back(t + r->duration() / 2);
        }
        t += instruction_duration(inst);
    }
    EXPECT_EQ(centres, (std::vector<int>{25, 75}));
    EXPECT_EQ(apply_dd(idle_only(5), s), idle_only(5));
}

TEST(DynamicalDecoupling, FullDriveTurns) {
    HardwareSpecs s = square_specs(1);
    s.dd_mode = DDMode::FullDrive;
    PulseSequence out = apply_dd(idle_only(100), s);
    ASSERT_EQ(out.instructions.size(), 1u);
    const auto &r = std::get<Rotation>(out.instructions[0]);
    EXPECT_EQ(r.duration(), 100);
    EXPECT_NEAR(r.area(), 2 * kPi * std::floor(100 * s.b_max / (2 * kPi)), 1e-12);
    EXPECT_EQ(apply_dd(idle_only(20), s), idle_only(20));
}

TEST(DynamicalDecoupling, WindowsAreIdentity) {
    for (PulseShape shape : {PulseShape::Square, PulseShape::GaussianFlattop}) {
        for (DDMode mode : {DDMode::SpinEcho, DDMode::FullDrive}) {
            HardwareSpecs s = gaussian_specs(1);
            s.shape = shape;
            s.dd_mode = mode;
            for (int t : {40, 77, 100, 333}) {
                Mat2 u = integrate_sequence(apply_dd(idle_only(t), s), NoiseGating::all_off());
                EXPECT_NEAR(process_fidelity(u, Mat2::Identity()), 1.0, 1e-10);
            }
        }
    }
}

TEST(Schedule, SingleRotationLayer) {
    IsaCircuit isa{Circuit{2, {make_gate(GateKind::RX, {0}, kPi)}}, {0, 1}, {0, 1}};
    PulseCircuit pc = schedule(isa, square_specs());
    ASSERT_EQ(pc.layers.size(), 1u);
    EXPECT_EQ(pc.layers[0].duration, 11);
    EXPECT_EQ(pc.layers[0].single_qubit_seqs[1].instructions, (std::vector<PulseInstruction>{Idle{11}}));
    EXPECT_NO_THROW(pc.validate());
}

TEST(Schedule, RejectsRawRzz) {
    IsaCircuit isa{Circuit{2, {make_gate(GateKind::RZZ, {0, 1}, 0.3)}}, {0, 1}, {0, 1}};
    EXPECT_THROW(schedule(isa, square_specs()), Error);
}

TEST(Schedule, LayerInvariantOnRandomCircuits) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-4, 4);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        HardwareSpecs s = gaussian_specs(4);
        s.dd_mode = static_cast<DDMode>(trial % 3);
        Circuit c{4, {}};
        for (int k = 0; k < 8; ++k) {
            int q = pick(rng) % 4;
            switch (pick(rng)) {
                case 0:
                    c.gates.push_back(make_gate(GateKind::CX, {q, (q + 1) % 4}));
                    break;
                case 1:
                    c.gates.push_back(make_gate(GateKind::RZZ, {q, (q + 2) % 4}, angle(rng)));
                    break;
                default:
                    c.gates.push_back(make_gate(GateKind::RY, {q}, angle(rng)));
            }
        }
        PulseCircuit pc = schedule(gate_transpile(c, s), s);
        ASSERT_NO_THROW(pc.validate());
        int total = 0;
        for (const auto &layer : pc.layers) {
            for (const auto &seq : layer.single_qubit_seqs) {
                ASSERT_EQ(seq.duration(), layer.duration);
            }
            for (const auto &seq : layer.two_qubit_seqs) {
                ASSERT_EQ(seq.duration(), layer.duration);
            }
            total += layer.duration;
        }
        EXPECT_EQ(total, pc.duration());
    }
}

TEST(Schedule, AttachingTracesKeepsWaveforms) {
    HardwareSpecs s = gaussian_specs(2);
    IsaCircuit isa = gate_transpile(Circuit{2, {make_gate(GateKind::H, {0}), make_gate(GateKind::CX, {0, 1})}}, s);
    PulseCircuit bare = schedule(isa, s);
    NoiseParams np;
    np.type = NoiseType::Pink;
    np.t2s = 50;
    np.duration = 4096;
    np.segment_duration = 4096;
    np.tjs = 200;
    auto env = ExperimentalEnvironment::generate(np, s);
    PulseCircuit noisy = schedule(isa, s, env);
    EXPECT_EQ(env.cursor(), bare.duration());
    EXPECT_TRUE(noisy.has_time_traces());
    EXPECT_NO_THROW(noisy.validate());
    EXPECT_EQ(without_time_traces(noisy), bare);
    const auto &first = *noisy.layers[0].single_qubit_seqs[0].time_trace;
    EXPECT_EQ(first[0], env.qubit_trace(0)[0]);

    np.duration = 16;
    np.segment_duration = 16;
    auto small = ExperimentalEnvironment::generate(np, s);
    try {
        schedule(isa, s, small);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EnvironmentExhausted);
    }
}

TEST(ScheduleIo, EmptyAndSingleRotation) {
    HardwareSpecs s = square_specs(2);
    PulseCircuit empty = schedule(IsaCircuit{Circuit{2, {}}, {0, 1}, {0, 1}}, s);
    auto doc = export_schedule(empty);
    EXPECT_EQ(doc["num_qubits"], 2);
    EXPECT_EQ(doc["qubits"].size(), 2u);
    EXPECT_TRUE(doc["qubits"][0]["instructions"].empty());

    PulseCircuit one = schedule(IsaCircuit{Circuit{1, {make_gate(GateKind::RX, {0}, kPi)}}, {0}, {0}}, square_specs(1));
    auto d1 = export_schedule(one);
    ASSERT_EQ(d1["qubits"][0]["instructions"].size(), 1u);
    EXPECT_EQ(d1["qubits"][0]["instructions"][0]["start"], 0);
    EXPECT_EQ(d1["qubits"][0]["instructions"][0]["samples"].size(), 11u);
}

TEST(ScheduleIo, RoundTripIsLossless) {
    HardwareSpecs s = gaussian_specs(3);
    s.dd_mode = DDMode::SpinEcho;
    Circuit c{3, {make_gate(GateKind::H, {0}), make_gate(GateKind::CX, {0, 2}), make_gate(GateKind::T, {1})}};
    IsaCircuit isa = gate_transpile(c, s);
    NoiseParams np;
    np.type = NoiseType::White;
    np.duration = 8192;
    np.tjs = 100;
    auto env = ExperimentalEnvironment::generate(np, s);
    PulseCircuit pc = schedule(isa, s, env);
    PulseCircuit back = import_schedule(nlohmann::json::parse(export_schedule(pc).dump()));
    EXPECT_EQ(back, pc);
    EXPECT_EQ(export_schedule(back).dump(), export_schedule(pc).dump());
    EXPECT_EQ(applied_unitary(to_circuit(back)), applied_unitary(to_circuit(pc)));
}

TEST(ScheduleIo, RejectsBrokenDocuments) {
    EXPECT_THROW(import_schedule(nlohmann::json::parse("{\"num_qubits\": 1}")), Error);
    PulseCircuit pc = schedule(IsaCircuit{Circuit{1, {make_gate(GateKind::RX, {0}, 1.0)}}, {0}, {0}}, square_specs(1));
    auto doc = export_schedule(pc);
    doc["qubits"][0]["instructions"][0]["type"] = "laser";
    EXPECT_THROW(import_schedule(doc), Error);
}

TEST(ScheduleIo, CsvRows) {
    PulseCircuit pc = schedule(IsaCircuit{Circuit{1, {make_gate(GateKind::RX, {0}, kPi)}}, {0}, {0}}, square_specs(1));
    std::string csv = schedule_csv(pc);
    EXPECT_EQ(csv.rfind("time,qubit,axis,amplitude\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
    EXPECT_EQ(trace_csv(std::vector<double>{0.5, -1.0}), "t,value\n0,0.5\n1,-1\n");
}

}  // namespace
}  // namespace spinpulse
