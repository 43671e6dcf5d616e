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

#include "spinpulse/hardware.h"

#include <cctype>
#include <cmath>
#include <sstream>

#include "spinpulse/error.h"

namespace spinpulse {

namespace {

std::string lower(std::string_view s) {
    std::string out;
    for (char c : s) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

void HardwareSpecs::validate() const {
    if (num_qubits <= 0) {
        throw Error(ErrorCode::InvalidParams, "num_qubits must be positive");
    }
    if (!(b_max > 0) || !(delta_max > 0) || !(j_max > 0) || !std::isfinite(b_max) || !std::isfinite(delta_max) ||
        !std::isfinite(j_max)) {
        throw Error(ErrorCode::InvalidParams, "b_max, delta_max and j_max must be positive and finite");
    }
    if (ramp_duration < 0) {
        throw Error(ErrorCode::InvalidParams, "ramp_duration must be nonnegative");
    }
}

std::vector<double> shape_samples(PulseShape shape, double amplitude, int plateau_len, int ramp) {
    if (shape == PulseShape::Square || ramp <= 0) {
        return std::vector<double>(static_cast<size_t>(std::max(plateau_len, 0)), amplitude);
    }
    const double sigma = ramp / 2.5;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(plateau_len + 2 * ramp));
    std::vector<double> rise(static_cast<size_t>(ramp));
    for (int k = 0; k < ramp; ++k) {
        double d = k - ramp;
        rise[static_cast<size_t>(k)] = amplitude * std::exp(-d * d / (2 * sigma * sigma));
    }
    out.insert(out.end(), rise.begin(), rise.end());
    out.insert(out.end(), static_cast<size_t>(std::max(plateau_len, 0)), amplitude);
    out.insert(out.end(), rise.rbegin(), rise.rend());
    return out;
}

std::string_view shape_name(PulseShape shape) {
    return shape == PulseShape::Square ? "square" : "gaussian";
}

PulseShape parse_shape(std::string_view name) {
    std::string n = lower(name);
    if (n == "square") {
        return PulseShape::Square;
    }
    if (n == "gaussian" || n == "gaussian_flattop") {
        return PulseShape::GaussianFlattop;
    }
    throw Error(ErrorCode::InvalidParams, "unknown pulse shape '" + std::string(name) + "'");
}

std::string_view dd_mode_name(DDMode mode) {
    switch (mode) {
        case DDMode::None:
            return "none";
        case DDMode::SpinEcho:
            return "spin_echo";
        case DDMode::FullDrive:
            return "full_drive";
    }
    return "none";
}

DDMode parse_dd_mode(std::string_view name) {
    std::string n = lower(name);
    if (n == "none") {
        return DDMode::None;
    }
    if (n == "spin_echo") {
        return DDMode::SpinEcho;
    }
    if (n == "full_drive") {
        return DDMode::FullDrive;
    }
    throw Error(ErrorCode::InvalidParams, "unknown dd_mode '" + std::string(name) + "'");
}

HardwareSpecs specs_from_config(const KeyValueConfig &cfg) {
    HardwareSpecs specs;
    if (auto v = cfg.get_int("num_qubits")) {
        specs.num_qubits = static_cast<int>(*v);
    }
    if (auto v = cfg.get_double("b_max")) {
        specs.b_max = *v;
    }
    if (auto v = cfg.get_double("delta_max")) {
        specs.delta_max = *v;
    }
    if (auto v = cfg.get_double("j_max")) {
        specs.j_max = *v;
    }
    if (auto v = cfg.get("shape")) {
        specs.shape = parse_shape(*v);
    }
    if (auto v = cfg.get_int("ramp_duration")) {
        specs.ramp_duration = static_cast<int>(*v);
    }
    if (auto v = cfg.get("dd_mode")) {
        specs.dd_mode = parse_dd_mode(*v);
    }
    specs.validate();
    return specs;
}

KeyValueConfig specs_to_config(const HardwareSpecs &specs) {
    KeyValueConfig cfg;
    cfg.set("num_qubits", std::to_string(specs.num_qubits));
    cfg.set("b_max", format_double(specs.b_max));
    cfg.set("delta_max", format_double(specs.delta_max));
    cfg.set("j_max", format_double(specs.j_max));
    cfg.set("shape", std::string(shape_name(specs.shape)));
    cfg.set("ramp_duration", std::to_string(specs.ramp_duration));
    cfg.set("dd_mode", std::string(dd_mode_name(specs.dd_mode)));
    return cfg;
}

}  // namespace spinpulse
