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

#ifndef SPINPULSE_CIRCUIT_H
#define SPINPULSE_CIRCUIT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinpulse/linalg.h"

namespace spinpulse {

enum class GateKind { X, Y, Z, H, S, T, RX, RY, RZ, CX, CZ, SWAP, RZZ };

bool is_rotation(GateKind kind);
int arity(GateKind kind);
std::string_view mnemonic(GateKind kind);
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view name);

/// One gate of a circuit. `angle` is meaningful only for rotation kinds.
///
/// `echo_half` marks an RZZ produced by the spin-echo split: it stands for one
/// of the two halves of the refocused two-qubit gate, and its ideal matrix is
/// RZZ(angle). It is serialized with the `rzz_half` mnemonic.
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    double angle = 0.0;
    bool echo_half = false;

    bool operator==(const Gate &) const = default;
};

Gate make_gate(GateKind kind, std::vector<int> qubits, double angle = 0.0);
Gate make_echo_half(int q0, int q1, double angle);

/// Ideal matrix of a gate on its own qubits, in the order given by `qubits`.
MatX gate_matrix(const Gate &gate);

struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;

    /// Throws Error on any invariant violation (arity, range, distinct qubits, finite angles).
    void validate() const;

    bool operator==(const Circuit &) const = default;
};

/// Parses the line-based circuit format:
///
///     qubits <N>
///     <mnemonic> <q...> [<angle>]
///
/// `#` starts a comment; blank lines are ignored. Errors name the offending line.
Circuit parse_circuit(std::string_view text);

std::string serialize_circuit(const Circuit &circuit);

/// Dense unitary of the whole circuit (operator product in reverse list order).
MatX circuit_unitary(const Circuit &circuit);

constexpr int kMaxDenseQubits = 12;

}  // namespace spinpulse

#endif
