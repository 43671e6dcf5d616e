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

#ifndef SPINPULSE_PULSE_H
#define SPINPULSE_PULSE_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spinpulse/hardware.h"
#include "spinpulse/transpiler.h"

namespace spinpulse {

class ExperimentalEnvironment;

/// Which field a rotation drives: X and Y use B(t) with phase 0 and pi/2,
/// Z uses the detuning delta_omega(t), ZZ uses the exchange J(t).
enum class Axis { X, Y, Z, ZZ };

std::string_view axis_name(Axis axis);
Axis parse_axis(std::string_view name);

/// Amplitude ceiling for an axis under the given hardware.
double max_amplitude(Axis axis, const HardwareSpecs &specs);

struct Rotation {
    Axis axis = Axis::X;
    std::vector<double> waveform;  ///< one amplitude per step, rad/step
    double phase = 0.0;            ///< drive phase for X/Y axes

    int duration() const { return static_cast<int>(waveform.size()); }
    /// Sum of the waveform, i.e. the rotation angle it realises.
    double area() const;

    bool operator==(const Rotation &) const = default;
};

struct Idle {
    int duration = 0;

    bool operator==(const Idle &) const = default;
};

using PulseInstruction = std::variant<Rotation, Idle>;

int instruction_duration(const PulseInstruction &inst);

struct PulseSequence {
    std::vector<int> targets;
    std::vector<PulseInstruction> instructions;
    /// Noise samples over the sequence (qubit noise for single-qubit sequences,
    /// exchange noise for pairs). Absent for noiseless schedules.
    std::optional<std::vector<double>> time_trace;

    int duration() const;
    bool is_pair() const { return targets.size() == 2; }
    /// Appends idle time until the sequence lasts `total` steps.
    void pad_to(int total);

    bool operator==(const PulseSequence &) const = default;
};

/// A slice of the schedule in which each qubit takes part in at most one gate.
/// `single_qubit_seqs[q]` belongs to qubit q; pair sequences carry J(t) while the
/// single-qubit sequences of the two qubits carry their detuning plateaus.
struct PulseLayer {
    std::vector<PulseSequence> single_qubit_seqs;
    std::vector<PulseSequence> two_qubit_seqs;
    int duration = 0;

    /// Pair sequence acting on q, or nullptr.
    const PulseSequence *pair_on(int q) const;

    bool operator==(const PulseLayer &) const = default;
};

struct PulseCircuit {
    int num_qubits = 1;
    std::vector<PulseLayer> layers;
    HardwareSpecs specs;
    std::vector<int> initial_layout;
    std::vector<int> final_layout;

    int duration() const;
    /// Throws InvalidArgument if a layer or sequence breaks the duration invariants.
    void validate() const;
    bool has_time_traces() const;

    bool operator==(const PulseCircuit &) const = default;
};

/// Shortest pulse of the configured shape whose samples sum to `theta`.
///
/// The duration is the smallest integer for which the peak stays within the axis
/// ceiling; the amplitude is then rescaled so the discrete sum is exact. Negative
/// angles negate the waveform on Z/ZZ and wrap by 2 pi on X/Y (B is nonnegative).
/// Returns nullopt for a zero angle (the gate is dropped).
std::optional<Rotation> from_angle(Axis axis, double theta, const HardwareSpecs &specs);

/// Exchange pulse J(t) with samples summing to `theta`: a Gaussian envelope
/// truncated at +-5 sigma, with sigma >= 4 / delta_max so the coupling switches on
/// and off adiabatically with respect to the detuning gap, and wide enough that the
/// peak stays within j_max. Used for every two-qubit block whatever the pulse shape.
Rotation adiabatic_exchange_pulse(double theta, const HardwareSpecs &specs);

/// Pulses of one echo half of the two-qubit gate on (q_lo, q_lo + 1).
struct TwoQubitBlock {
    PulseSequence pair;         ///< idle margin, adiabatic J(t), idle margin
    PulseSequence detuning_lo;  ///< +delta_max/2 plateau on q_lo
    PulseSequence detuning_hi;  ///< -delta_max/2 plateau on q_hi
};

/// J(t) integrates to `theta_half` and is nonzero only while the detuning
/// difference sits at its plateau delta_max. Returns nullopt when theta_half is 0.
std::optional<TwoQubitBlock> build_two_qubit_sequence(int q_lo, int q_hi, double theta_half,
                                                      const HardwareSpecs &specs);

/// Replaces idle instructions of a single-qubit sequence by the decoupling pulses
/// selected in specs.dd_mode, when they fit. Total duration is unchanged.
PulseSequence apply_dd(const PulseSequence &seq, const HardwareSpecs &specs);

/// Lowers a native circuit to layers of pulse sequences (ASAP layering, idle
/// padding at the end of each sequence, then decoupling of idle windows).
PulseCircuit schedule(const IsaCircuit &isa, const HardwareSpecs &specs);

/// As above, then attaches the noise window starting at the environment cursor
/// and advances the cursor by the circuit duration.
PulseCircuit schedule(const IsaCircuit &isa, const HardwareSpecs &specs, ExperimentalEnvironment &env);

/// One layer of `duration` idle steps on every qubit (decoupled per specs.dd_mode).
PulseCircuit idle_schedule(int num_qubits, int duration, const HardwareSpecs &specs);

/// Copy of `pc` whose sequences carry noise samples from [start, start + duration).
PulseCircuit with_time_traces(const PulseCircuit &pc, const ExperimentalEnvironment &env, int start);

/// Copy of `pc` without noise annotations.
PulseCircuit without_time_traces(const PulseCircuit &pc);

}  // namespace spinpulse

#endif
