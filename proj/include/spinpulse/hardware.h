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

#ifndef SPINPULSE_HARDWARE_H
#define SPINPULSE_HARDWARE_H

#include <string>
#include <string_view>
#include <vector>

#include "spinpulse/config.h"

namespace spinpulse {

enum class PulseShape { Square, GaussianFlattop };

enum class DDMode { None, SpinEcho, FullDrive };

/// Device model shared by every compilation pass. Amplitudes are angular
/// frequencies in rad per sampling step; durations are integer steps.
/// Qubits are on a line: the native couplings are the pairs (i, i + 1).
struct HardwareSpecs {
    int num_qubits = 1;
    double b_max = 0.3;      ///< max drive amplitude B_i(t)
    double delta_max = 0.3;  ///< max detuning delta_omega_i(t)
    double j_max = 0.03;     ///< max exchange J_ij(t)
    PulseShape shape = PulseShape::GaussianFlattop;
    int ramp_duration = 5;
    DDMode dd_mode = DDMode::None;

    void validate() const;

    /// True when j_max / delta_max is too large for the perturbative two-qubit gate.
    bool schrieffer_wolff_warning() const { return j_max / delta_max > 0.2; }

    bool operator==(const HardwareSpecs &) const = default;
};

/// Samples of a pulse of the given shape and peak amplitude.
///
/// Square: `plateau_len` copies of `amplitude` (ramp ignored).
/// Gaussian flat-top: half-Gaussian rise of `ramp` samples, the plateau, then the
/// mirrored fall. Rise sample k is amplitude * exp(-(k - ramp)^2 / (2 s^2)), s = ramp / 2.5.
std::vector<double> shape_samples(PulseShape shape, double amplitude, int plateau_len, int ramp);

std::string_view shape_name(PulseShape shape);
PulseShape parse_shape(std::string_view name);
std::string_view dd_mode_name(DDMode mode);
DDMode parse_dd_mode(std::string_view name);

/// Reads `num_qubits, b_max, delta_max, j_max, shape, ramp_duration, dd_mode`;
/// missing keys keep the defaults above.
HardwareSpecs specs_from_config(const KeyValueConfig &cfg);
KeyValueConfig specs_to_config(const HardwareSpecs &specs);

}  // namespace spinpulse

#endif
