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

#ifndef SPINPULSE_NOISE_H
#define SPINPULSE_NOISE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spinpulse/config.h"
#include "spinpulse/hardware.h"

namespace spinpulse {

enum class NoiseType { Quasistatic, White, Pink };

std::string_view noise_type_name(NoiseType type);
NoiseType parse_noise_type(std::string_view name);

/// Parameters of the classical noise traces. Times are in sampling steps.
///
/// For quasi-static noise `segment_duration` is the length over which the value is
/// held; white noise always uses 1; for pink noise it sets the low cutoff
/// f_min = 1 / segment_duration.
struct NoiseParams {
    NoiseType type = NoiseType::Quasistatic;
    double t2s = 100.0;
    std::optional<double> tjs;
    int duration = 1 << 16;
    int segment_duration = 1 << 16;
    std::uint64_t seed = 0;

    void validate() const;
    /// Copy with the type-specific constraints applied (white forces segment 1).
    NoiseParams normalized() const;
};

NoiseParams noise_params_from_config(const KeyValueConfig &cfg);

/// Standard deviation of the per-sample distribution: sqrt(2)/T2* for quasi-static,
/// sqrt(2/T2*) for white. Not defined for pink noise.
double noise_sigma(NoiseType type, double t2s);

/// Spectral intensity S0 for which the pink-noise coherence time at t = 1 equals t2s.
double pink_spectral_intensity(double t2s, double f_min);

/// SplitMix64 mix of the master seed with a stream index; per-trace seeds come from here.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// One noise trace of `duration` samples.
///
/// Pink traces use spectral synthesis on the grid f_k = k / duration: complex Gaussian
/// amplitudes with E|G_k|^2 = 1/|k| for |f_k| >= f_min (zero below and at DC), so the
/// periodogram |FFT(g)_k|^2 / duration of g averages to 1/f_k. The result is
/// 2 pi sqrt(S0) g(t).
std::vector<double> generate_trace(NoiseType type, double t2s, int duration, int segment_duration,
                                   std::uint64_t seed);

/// |FFT(x)_k|^2 / N for k = 0 .. N/2. White noise of variance s^2 has a flat
/// expectation s^2 under this normalisation.
std::vector<double> periodogram(std::span<const double> x);

/// Pre-generated noise traces for every qubit (and every neighbouring pair when
/// exchange noise is enabled), plus a laboratory-time cursor. Circuit realisations
/// read consecutive windows starting at the cursor.
class ExperimentalEnvironment {
   public:
    static ExperimentalEnvironment generate(const NoiseParams &params, const HardwareSpecs &specs);

    ExperimentalEnvironment(NoiseParams params, HardwareSpecs specs, std::vector<std::vector<double>> qubit_traces,
                            std::vector<std::vector<double>> pair_traces);

    const NoiseParams &params() const { return params_; }
    const HardwareSpecs &specs() const { return specs_; }
    int num_qubits() const { return static_cast<int>(qubit_traces_.size()); }
    int duration() const { return params_.duration; }
    int cursor() const { return cursor_; }
    int remaining() const { return params_.duration - cursor_; }
    bool has_exchange_noise() const { return !pair_traces_.empty(); }

    std::span<const double> qubit_trace(int q) const;
    /// Trace of the pair (lo, lo + 1).
    std::span<const double> pair_trace(int lo) const;

    /// Throws EnvironmentExhausted when fewer than `length` samples remain after `start`.
    void require_window(int start, int length) const;

    void advance_cursor(int dt);

   private:
    NoiseParams params_;
    HardwareSpecs specs_;
    std::vector<std::vector<double>> qubit_traces_;
    std::vector<std::vector<double>> pair_traces_;
    int cursor_ = 0;
};

/// J(t) + (J(t) / j_max) * eps(t): the linearised exchange fluctuation.
std::vector<double> exchange_distortion(std::span<const double> j_wave, std::span<const double> eps_window,
                                        double j_max);
std::vector<double> exchange_distortion(std::span<const double> j_wave, int pair_lo, int window_start,
                                        const ExperimentalEnvironment &env);

}  // namespace spinpulse

#endif
