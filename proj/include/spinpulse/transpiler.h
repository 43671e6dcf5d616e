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

#ifndef SPINPULSE_TRANSPILER_H
#define SPINPULSE_TRANSPILER_H

#include <vector>

#include "spinpulse/circuit.h"
#include "spinpulse/hardware.h"

namespace spinpulse {

/// A circuit over {RX, RY, RZ, RZZ} with every two-qubit gate on neighbouring
/// qubits. Layouts map logical qubit q to its physical position:
/// final_layout[q] is where the state of input qubit q ends up.
struct IsaCircuit {
    Circuit circuit;
    std::vector<int> initial_layout;
    std::vector<int> final_layout;
};

/// Rewrites `c` into native gates, routes non-adjacent pairs with SWAPs and
/// splits every RZZ(theta) into the echo sequence
/// [RX(pi) on both, half(theta/2), RX(pi) on both, half(theta/2)].
IsaCircuit gate_transpile(const Circuit &c, const HardwareSpecs &specs);

/// True when the circuit only holds native kinds on adjacent pairs.
bool is_native(const Circuit &c);

/// Permutation matrix P with P|b_0 ... b_{N-1}> = |b'> where b'[layout[q]] = b[q].
MatX layout_permutation(const std::vector<int> &layout);

}  // namespace spinpulse

#endif
