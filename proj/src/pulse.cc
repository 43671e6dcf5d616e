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

#include "spinpulse/pulse.h"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spinpulse/error.h"
#include "spinpulse/noise.h"

namespace spinpulse {

namespace {

constexpr double kPi = std::numbers::pi;

// Sum of both ramps of a unit-amplitude flat-top pulse.
double unit_ramp_area(int ramp) {
    auto unit = shape_samples(PulseShape::GaussianFlattop, 1.0, 0, ramp);
    return std::accumulate(unit.begin(), unit.end(), 0.0);
}

bool uses_ramps(const HardwareSpecs &specs) {
    return specs.shape == PulseShape::GaussianFlattop && specs.ramp_duration > 0;
}

// Waveform of exactly `total` steps with area `area`; nullopt if the peak would exceed `ceiling`.
std::optional<std::vector<double>> stretched_waveform(double area, int total, double ceiling,
                                                      const HardwareSpecs &specs) {
    if (total <= 0) {
        return std::nullopt;
    }
    if (uses_ramps(specs)) {
        int plateau = total - 2 * specs.ramp_duration;
        if (plateau < 0) {
            return std::nullopt;
        }
        double amp = area / (plateau + unit_ramp_area(specs.ramp_duration));
        if (std::abs(amp) > ceiling) {
            return std::nullopt;
        }
        return shape_samples(specs.shape, amp, plateau, specs.ramp_duration);
    }
    double amp = area / total;
    if (std::abs(amp) > ceiling) {
        return std::nullopt;
    }
    return shape_samples(PulseShape::Square, amp, total, 0);
}

std::vector<PulseInstruction> spin_echo_window(int t, const HardwareSpecs &specs) {
    auto x = from_angle(Axis::X, kPi, specs);
    const int tp = x->duration();
    if (2 * tp > t) {
        return {Idle{t}};
    }
    // X pulses centred at t/4 and 3t/4.
    int s1 = std::max(0, t / 4 - tp / 2);
    int s2 = std::max(s1 + tp, (3 * t) / 4 - tp / 2);
    s2 = std::min(s2, t - tp);
    std::vector<PulseInstruction> out;
    if (s1 > 0) {
        out.emplace_back(Idle{s1});
    }
    out.emplace_back(*x);
    if (s2 - s1 - tp > 0) {
        out.emplace_back(Idle{s2 - s1 - tp});
    }
    out.emplace_back(*x);
    if (t - s2 - tp > 0) {
        out.emplace_back(Idle{t - s2 - tp});
    }
    return out;
}

// Duration from_angle would choose for a positive angle.
int rotation_steps(double theta, double ceiling, const HardwareSpecs &specs) {
    if (uses_ramps(specs)) {
        double ramps = unit_ramp_area(specs.ramp_duration);
        return static_cast<int>(std::max(0.0, std::ceil(theta / ceiling - ramps))) + 2 * specs.ramp_duration;
    }
    return std::max(1, static_cast<int>(std::ceil(theta / ceiling)));
}

std::vector<PulseInstruction> full_drive_window(int t, const HardwareSpecs &specs) {
    // Largest number of full turns whose shortest pulse fits in the window.
    int n = static_cast<int>(specs.b_max * t / (2 * kPi)) + 1;
    while (n > 0 && rotation_steps(2 * kPi * n, specs.b_max, specs) > t) {
        --n;
    }
    if (n == 0) {
        return {Idle{t}};
    }
    auto wave = stretched_waveform(2 * kPi * n, t, specs.b_max, specs);
    if (!wave) {
        return {Idle{t}};
    }
    return {Rotation{Axis::X, std::move(*wave), 0.0}};
}

struct LoweredGate {
    std::vector<int> qubits;
    std::optional<Rotation> rotation;
    std::optional<TwoQubitBlock> block;
};

PulseSequence idle_sequence(int q, int duration) {
    PulseSequence seq{{q}, {}, std::nullopt};
    if (duration > 0) {
        seq.instructions.emplace_back(Idle{duration});
    }
    return seq;
}

std::vector<double> trace_window(std::span<const double> trace, int start, int length) {
    auto window = trace.subspan(static_cast<size_t>(start), static_cast<size_t>(length));
    return std::vector<double>(window.begin(), window.end());
}

}  // namespace

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return "X";
        case Axis::Y:
            return "Y";
        case Axis::Z:
            return "Z";
        case Axis::ZZ:
            return "ZZ";
    }
    return "X";
}

Axis parse_axis(std::string_view name) {
    if (name == "X") {
        return Axis::X;
    }
    if (name == "Y") {
        return Axis::Y;
    }
    if (name == "Z") {
        return Axis::Z;
    }
    if (name == "ZZ") {
        return Axis::ZZ;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown axis '" + std::string(name) + "'");
}

double max_amplitude(Axis axis, const HardwareSpecs &specs) {
    switch (axis) {
        case Axis::X:
        case Axis::Y:
            return specs.b_max;
        case Axis::Z:
            return specs.delta_max;
        case Axis::ZZ:
            return specs.j_max;
    }
    return specs.b_max;
}

double Rotation::area() const { return std::accumulate(waveform.begin(), waveform.end(), 0.0); }

int instruction_duration(const PulseInstruction &inst) {
    if (const auto *idle = std::get_if<Idle>(&inst)) {
        return idle->duration;
    }
    return std::get<Rotation>(inst).duration();
}

int PulseSequence::duration() const {
    int total = 0;
    for (const auto &inst : instructions) {
        total += instruction_duration(inst);
    }
    return total;
}

void PulseSequence::pad_to(int total) {
    int d = duration();
    if (total > d) {
        instructions.emplace_back(Idle{total - d});
    }
}

const PulseSequence *PulseLayer::pair_on(int q) const {
    for (const auto &seq : two_qubit_seqs) {
        if (seq.targets[0] == q || seq.targets[1] == q) {
            return &seq;
        }
    }
    return nullptr;
}

int PulseCircuit::duration() const {
    int total = 0;
    for (const auto &layer : layers) {
        total += layer.duration;
    }
    return total;
}

bool PulseCircuit::has_time_traces() const {
    for (const auto &layer : layers) {
        for (const auto &seq : layer.single_qubit_seqs) {
            if (seq.time_trace) {
                return true;
            }
        }
    }
    return false;
}

void PulseCircuit::validate() const {
    for (size_t l = 0; l < layers.size(); ++l) {
        const PulseLayer &layer = layers[l];
        const std::string where = "layer " + std::to_string(l);
        if (static_cast<int>(layer.single_qubit_seqs.size()) != num_qubits) {
            throw Error(ErrorCode::InvalidArgument, where + ": needs one single-qubit sequence per qubit");
        }
        auto check = [&](const PulseSequence &seq) {
            if (seq.duration() != layer.duration) {
                throw Error(ErrorCode::InvalidArgument, where + ": sequence duration differs from layer duration");
            }
            if (seq.time_trace && static_cast<int>(seq.time_trace->size()) != layer.duration) {
                throw Error(ErrorCode::InvalidArgument, where + ": time trace length differs from layer duration");
            }
            for (const auto &inst : seq.instructions) {
                if (const auto *r = std::get_if<Rotation>(&inst); r && r->waveform.empty()) {
                    throw Error(ErrorCode::InvalidArgument, where + ": empty waveform");
                }
            }
        };
        for (int q = 0; q < num_qubits; ++q) {
            const auto &seq = layer.single_qubit_seqs[static_cast<size_t>(q)];
            if (seq.targets != std::vector<int>{q}) {
                throw Error(ErrorCode::InvalidArgument, where + ": single-qubit sequences out of order");
            }
            check(seq);
        }
        std::vector<int> used(static_cast<size_t>(num_qubits), 0);
        for (const auto &seq : layer.two_qubit_seqs) {
            if (seq.targets.size() != 2 || seq.targets[1] != seq.targets[0] + 1 || seq.targets[0] < 0 ||
                seq.targets[1] >= num_qubits) {
                throw Error(ErrorCode::NonAdjacentGate, where + ": pair sequence is not on neighbouring qubits");
            }
            for (int q : seq.targets) {
                if (used[static_cast<size_t>(q)]++) {
                    throw Error(ErrorCode::InvalidArgument, where + ": qubit in two pair sequences");
                }
            }
            check(seq);
        }
    }
}

std::optional<Rotation> from_angle(Axis axis, double theta, const HardwareSpecs &specs) {
    if (!std::isfinite(theta)) {
        throw Error(ErrorCode::InvalidArgument, "non-finite rotation angle");
    }
    if ((axis == Axis::X || axis == Axis::Y) && theta < 0) {
        theta += 2 * kPi * std::ceil(-theta / (2 * kPi));
    }
    if (theta == 0.0) {
        return std::nullopt;
    }
    const double ceiling = max_amplitude(axis, specs);
    const double magnitude = std::abs(theta);
    const double phase = axis == Axis::Y ? kPi / 2 : 0.0;

    const int total = rotation_steps(magnitude, ceiling, specs);
    auto wave = stretched_waveform(theta, total, ceiling * (1 + 1e-12), specs);
    return Rotation{axis, std::move(*wave), phase};
}

Rotation adiabatic_exchange_pulse(double theta, const HardwareSpecs &specs) {
    constexpr double kAdiabaticity = 6.0;  // sigma * gap
    constexpr double kSpan = 5.0;          // half-width in units of sigma
    const double magnitude = std::abs(theta);
    double sigma = std::max(kAdiabaticity / specs.delta_max,
                            magnitude / (specs.j_max * std::sqrt(2 * kPi)));
    while (true) {
        const int len = 2 * static_cast<int>(std::ceil(kSpan * sigma));
        const double mid = (len - 1) / 2.0;
        std::vector<double> wave(static_cast<size_t>(len));
        double sum = 0.0;
        for (int k = 0; k < len; ++k) {
            wave[static_cast<size_t>(k)] = std::exp(-(k - mid) * (k - mid) / (2 * sigma * sigma));
            sum += wave[static_cast<size_t>(k)];
        }
        const double amp = theta / sum;
        if (std::abs(amp) <= specs.j_max) {
            for (double &w : wave) {
                w *= amp;
            }
            return Rotation{Axis::ZZ, std::move(wave), 0.0};
        }
        sigma *= 1.01;
    }
}

std::optional<TwoQubitBlock> build_two_qubit_sequence(int q_lo, int q_hi, double theta_half,
                                                      const HardwareSpecs &specs) {
    if (q_hi != q_lo + 1) {
        throw Error(ErrorCode::NonAdjacentGate, "two-qubit pulses need neighbouring qubits");
    }
    if (!std::isfinite(theta_half)) {
        throw Error(ErrorCode::InvalidArgument, "non-finite rotation angle");
    }
    if (theta_half == 0.0) {
        return std::nullopt;
    }
    auto coupling = std::optional<Rotation>(adiabatic_exchange_pulse(theta_half, specs));
    if (specs.schrieffer_wolff_warning()) {
        warn_once("sw-ratio", "j_max / delta_max exceeds 0.2; the adiabatic two-qubit gate loses accuracy");
    }
    const int margin = specs.ramp_duration + 1;
    const int j_len = coupling->duration();
    const int total = j_len + 2 * margin;
    const double half_gap = specs.delta_max / 2;

    TwoQubitBlock block;
    block.pair.targets = {q_lo, q_hi};
    block.pair.instructions = {Idle{margin}, *coupling, Idle{margin}};

    auto detuning = [&](int q, double level) {
        std::vector<double> wave = uses_ramps(specs)
                                       ? shape_samples(specs.shape, level, total - 2 * specs.ramp_duration,
                                                       specs.ramp_duration)
                                       : shape_samples(PulseShape::Square, level, total, 0);
        return PulseSequence{{q}, {Rotation{Axis::Z, std::move(wave), 0.0}}, std::nullopt};
    };
    block.detuning_lo = detuning(q_lo, +half_gap);
    block.detuning_hi = detuning(q_hi, -half_gap);

    const auto &lo_wave = std::get<Rotation>(block.detuning_lo.instructions[0]).waveform;
    const auto &hi_wave = std::get<Rotation>(block.detuning_hi.instructions[0]).waveform;
    for (int k = 0; k < j_len; ++k) {
        size_t t = static_cast<size_t>(margin + k);
        if (coupling->waveform[static_cast<size_t>(k)] != 0.0 && lo_wave[t] - hi_wave[t] != specs.delta_max) {
            throw Error(ErrorCode::AdiabaticityViolation, "J pulse extends outside the detuning plateau");
        }
    }
    return block;
}

PulseSequence apply_dd(const PulseSequence &seq, const HardwareSpecs &specs) {
    if (specs.dd_mode == DDMode::None || seq.is_pair()) {
        return seq;
    }
    PulseSequence out{seq.targets, {}, seq.time_trace};
    for (const auto &inst : seq.instructions) {
        const auto *idle = std::get_if<Idle>(&inst);
        if (!idle) {
            out.instructions.push_back(inst);
            continue;
        }
        auto window = specs.dd_mode == DDMode::SpinEcho ? spin_echo_window(idle->duration, specs)
                                                        : full_drive_window(idle->duration, specs);
        out.instructions.insert(out.instructions.end(), window.begin(), window.end());
    }
    return out;
}

PulseCircuit schedule(const IsaCircuit &isa, const HardwareSpecs &specs) {
    const Circuit &c = isa.circuit;
    c.validate();
    specs.validate();
    if (c.num_qubits > specs.num_qubits) {
        throw Error(ErrorCode::QubitOutOfRange, "circuit has more qubits than the hardware");
    }
    if (!is_native(c)) {
        throw Error(ErrorCode::InvalidArgument, "schedule needs a native circuit; run gate_transpile first");
    }

    std::vector<LoweredGate> lowered;
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::RZZ) {
            if (!g.echo_half) {
                throw Error(ErrorCode::InvalidArgument, "RZZ must be echo-split; run gate_transpile first");
            }
            int lo = std::min(g.qubits[0], g.qubits[1]);
            auto block = build_two_qubit_sequence(lo, lo + 1, g.angle, specs);
            if (block) {
                lowered.push_back({{lo, lo + 1}, std::nullopt, std::move(block)});
            }
            continue;
        }
        Axis axis = g.kind == GateKind::RX ? Axis::X : g.kind == GateKind::RY ? Axis::Y : Axis::Z;
        auto rot = from_angle(axis, g.angle, specs);
        if (rot) {
            lowered.push_back({g.qubits, std::move(rot), std::nullopt});
        }
    }

    // ASAP layering: a gate lands right after the last layer touching any of its qubits.
    std::vector<int> last(static_cast<size_t>(c.num_qubits), -1);
    std::vector<std::vector<const LoweredGate *>> buckets;
    for (const auto &lg : lowered) {
        int layer = 0;
        for (int q : lg.qubits) {
            layer = std::max(layer, last[static_cast<size_t>(q)] + 1);
        }
        for (int q : lg.qubits) {
            last[static_cast<size_t>(q)] = layer;
        }
        if (static_cast<int>(buckets.size()) <= layer) {
            buckets.resize(static_cast<size_t>(layer) + 1);
        }
        buckets[static_cast<size_t>(layer)].push_back(&lg);
    }

    PulseCircuit pc;
    pc.num_qubits = c.num_qubits;
    pc.specs = specs;
    pc.initial_layout = isa.initial_layout;
    pc.final_layout = isa.final_layout;
    for (const auto &bucket : buckets) {
        PulseLayer layer;
        for (int q = 0; q < c.num_qubits; ++q) {
            layer.single_qubit_seqs.push_back(idle_sequence(q, 0));
        }
        std::vector<bool> in_pair(static_cast<size_t>(c.num_qubits), false);
        for (const LoweredGate *lg : bucket) {
            if (lg->rotation) {
                layer.single_qubit_seqs[static_cast<size_t>(lg->qubits[0])].instructions.emplace_back(*lg->rotation);
            } else {
                const TwoQubitBlock &b = *lg->block;
                layer.two_qubit_seqs.push_back(b.pair);
                layer.single_qubit_seqs[static_cast<size_t>(lg->qubits[0])] = b.detuning_lo;
                layer.single_qubit_seqs[static_cast<size_t>(lg->qubits[1])] = b.detuning_hi;
                in_pair[static_cast<size_t>(lg->qubits[0])] = true;
                in_pair[static_cast<size_t>(lg->qubits[1])] = true;
            }
        }
        for (const auto &seq : layer.single_qubit_seqs) {
            layer.duration = std::max(layer.duration, seq.duration());
        }
        for (const auto &seq : layer.two_qubit_seqs) {
            layer.duration = std::max(layer.duration, seq.duration());
        }
        for (auto &seq : layer.two_qubit_seqs) {
            seq.pad_to(layer.duration);
        }
        for (int q = 0; q < c.num_qubits; ++q) {
            auto &seq = layer.single_qubit_seqs[static_cast<size_t>(q)];
            seq.pad_to(layer.duration);
            if (!in_pair[static_cast<size_t>(q)]) {
                seq = apply_dd(seq, specs);
            }
        }
        pc.layers.push_back(std::move(layer));
    }
    return pc;
}

PulseCircuit schedule(const IsaCircuit &isa, const HardwareSpecs &specs, ExperimentalEnvironment &env) {
    PulseCircuit pc = schedule(isa, specs);
    const int start = env.cursor();
    PulseCircuit noisy = with_time_traces(pc, env, start);
    if (pc.duration() > 0) {
        env.advance_cursor(pc.duration());
    }
    return noisy;
}

PulseCircuit idle_schedule(int num_qubits, int duration, const HardwareSpecs &specs) {
    if (num_qubits <= 0 || duration <= 0) {
        throw Error(ErrorCode::InvalidArgument, "idle schedule needs qubits and a positive duration");
    }
    PulseCircuit pc;
    pc.num_qubits = num_qubits;
    pc.specs = specs;
    pc.initial_layout.resize(static_cast<size_t>(num_qubits));
    std::iota(pc.initial_layout.begin(), pc.initial_layout.end(), 0);
    pc.final_layout = pc.initial_layout;
    PulseLayer layer;
    layer.duration = duration;
    for (int q = 0; q < num_qubits; ++q) {
        layer.single_qubit_seqs.push_back(apply_dd(idle_sequence(q, duration), specs));
    }
    pc.layers.push_back(std::move(layer));
    return pc;
}

PulseCircuit with_time_traces(const PulseCircuit &pc, const ExperimentalEnvironment &env, int start) {
    if (env.num_qubits() < pc.num_qubits) {
        throw Error(ErrorCode::QubitOutOfRange, "environment has fewer qubits than the circuit");
    }
    env.require_window(start, pc.duration());
    const NoiseParams &np = env.params();
    if (np.type == NoiseType::Quasistatic && pc.duration() > 0) {
        int seg = np.segment_duration;
        if (start / seg != (start + pc.duration() - 1) / seg) {
            warn_once("qs-boundary",
                      "circuit window crosses a quasi-static segment boundary; use segment_duration >= circuit "
                      "duration (and a multiple of it)");
        }
    }
    PulseCircuit out = pc;
    int offset = start;
    for (auto &layer : out.layers) {
        for (auto &seq : layer.single_qubit_seqs) {
            seq.time_trace = trace_window(env.qubit_trace(seq.targets[0]), offset, layer.duration);
        }
        if (env.has_exchange_noise()) {
            for (auto &seq : layer.two_qubit_seqs) {
                seq.time_trace = trace_window(env.pair_trace(seq.targets[0]), offset, layer.duration);
            }
        }
        offset += layer.duration;
    }
    return out;
}

PulseCircuit without_time_traces(const PulseCircuit &pc) {
    PulseCircuit out = pc;
    for (auto &layer : out.layers) {
        for (auto &seq : layer.single_qubit_seqs) {
            seq.time_trace.reset();
        }
        for (auto &seq : layer.two_qubit_seqs) {
            seq.time_trace.reset();
        }
    }
    return out;
}

}  // namespace spinpulse
