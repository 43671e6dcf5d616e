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

#include "spinpulse/noise.h"

#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <unsupported/Eigen/FFT>

#include "spinpulse/error.h"

namespace spinpulse {

namespace {

constexpr std::uint64_t kPairStreamTag = std::uint64_t{1} << 32;
constexpr std::uint64_t kExchangeStreamTag = std::uint64_t{1} << 33;

std::string lower(std::string_view s) {
    std::string out;
    for (char c : s) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::vector<double> pink_trace(double t2s, int duration, int segment_duration, std::mt19937_64 &rng) {
    const size_t n = static_cast<size_t>(duration);
    const double f_min = 1.0 / segment_duration;
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::complex<double>> spectrum(n, {0.0, 0.0});
    for (size_t k = 1; 2 * k <= n; ++k) {
        double f = static_cast<double>(k) / static_cast<double>(n);
        double a = normal(rng);
        double b = normal(rng);
        if (f < f_min) {
            continue;
        }
        // The ifft below divides by n, so amplitudes are carried as n * G_k.
        if (2 * k == n) {
            spectrum[k] = static_cast<double>(n) * a * std::sqrt(1.0 / static_cast<double>(k));
        } else {
            std::complex<double> g = std::complex<double>(a, b) * std::sqrt(1.0 / (2.0 * static_cast<double>(k)));
            spectrum[k] = static_cast<double>(n) * g;
            spectrum[n - k] = std::conj(spectrum[k]);
        }
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> time(n);
    fft.inv(time, spectrum);
    const double scale = 2 * std::numbers::pi * std::sqrt(pink_spectral_intensity(t2s, f_min));
    std::vector<double> out(n);
    for (size_t t = 0; t < n; ++t) {
        out[t] = scale * time[t].real();
    }
    return out;
}

}  // namespace

std::string_view noise_type_name(NoiseType type) {
    switch (type) {
        case NoiseType::Quasistatic:
            return "quasistatic";
        case NoiseType::White:
            return "white";
        case NoiseType::Pink:
            return "pink";
    }
    return "quasistatic";
}

NoiseType parse_noise_type(std::string_view name) {
    std::string n = lower(name);
    if (n == "quasistatic" || n == "quasi_static" || n == "quasi-static") {
        return NoiseType::Quasistatic;
    }
    if (n == "white") {
        return NoiseType::White;
    }
    if (n == "pink") {
        return NoiseType::Pink;
    }
    throw Error(ErrorCode::InvalidParams, "unknown noise type '" + std::string(name) + "'");
}

void NoiseParams::validate() const {
    if (!(t2s > 0) || !std::isfinite(t2s)) {
        throw Error(ErrorCode::InvalidParams, "t2s must be positive");
    }
    if (tjs && (!(*tjs > 0) || !std::isfinite(*tjs))) {
        throw Error(ErrorCode::InvalidParams, "tjs must be positive");
    }
    if (duration <= 0) {
        throw Error(ErrorCode::InvalidParams, "duration must be positive");
    }
    if (segment_duration <= 0 || segment_duration > duration) {
        throw Error(ErrorCode::InvalidParams, "segment_duration must lie in [1, duration]");
    }
    if (type == NoiseType::White && segment_duration != 1) {
        throw Error(ErrorCode::InvalidParams, "white noise requires segment_duration = 1");
    }
    if (type == NoiseType::Pink && segment_duration < 2) {
        throw Error(ErrorCode::InvalidParams, "pink noise requires segment_duration >= 2");
    }
}

NoiseParams NoiseParams::normalized() const {
    NoiseParams p = *this;
    if (p.type == NoiseType::White) {
        p.segment_duration = 1;
    }
    return p;
}

NoiseParams noise_params_from_config(const KeyValueConfig &cfg) {
    NoiseParams p;
    if (auto v = cfg.get("noise_type")) {
        p.type = parse_noise_type(*v);
    }
    if (auto v = cfg.get_double("t2s")) {
        p.t2s = *v;
    }
    if (auto v = cfg.get_double("tjs")) {
        p.tjs = *v;
    }
    if (auto v = cfg.get_int("duration")) {
        p.duration = static_cast<int>(*v);
    }
    if (auto v = cfg.get_int("segment_duration")) {
        p.segment_duration = static_cast<int>(*v);
    } else {
        p.segment_duration = p.duration;
    }
    if (auto v = cfg.get_int("seed")) {
        p.seed = static_cast<std::uint64_t>(*v);
    }
    p = p.normalized();
    p.validate();
    return p;
}

double noise_sigma(NoiseType type, double t2s) {
    switch (type) {
        case NoiseType::Quasistatic:
            return std::sqrt(2.0) / t2s;
        case NoiseType::White:
            return std::sqrt(2.0 / t2s);
        case NoiseType::Pink:
            break;
    }
    throw Error(ErrorCode::InvalidParams, "pink noise has no per-sample sigma");
}

double pink_spectral_intensity(double t2s, double f_min) {
    const double two_pi_t = 2 * std::numbers::pi * t2s;
    return 1.0 / (two_pi_t * two_pi_t * std::log(1.0 / f_min));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<double> generate_trace(NoiseType type, double t2s, int duration, int segment_duration,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(static_cast<size_t>(duration));
    switch (type) {
        case NoiseType::Quasistatic: {
            std::normal_distribution<double> normal(0.0, noise_sigma(type, t2s));
            for (size_t start = 0; start < out.size(); start += static_cast<size_t>(segment_duration)) {
                double value = normal(rng);
                size_t end = std::min(out.size(), start + static_cast<size_t>(segment_duration));
                std::fill(out.begin() + static_cast<std::ptrdiff_t>(start), out.begin() + static_cast<std::ptrdiff_t>(end),
                          value);
            }
            return out;
        }
        case NoiseType::White: {
            std::normal_distribution<double> normal(0.0, noise_sigma(type, t2s));
            for (double &v : out) {
                v = normal(rng);
            }
            return out;
        }
        case NoiseType::Pink:
            return pink_trace(t2s, duration, segment_duration, rng);
    }
    return out;
}

std::vector<double> periodogram(std::span<const double> x) {
    const size_t n = x.size();
    std::vector<std::complex<double>> in(x.begin(), x.end());
    std::vector<std::complex<double>> spectrum(n);
    Eigen::FFT<double> fft;
    fft.fwd(spectrum, in);
    std::vector<double> out(n / 2 + 1);
    for (size_t k = 0; k < out.size(); ++k) {
        out[k] = std::norm(spectrum[k]) / static_cast<double>(n);
    }
    return out;
}

ExperimentalEnvironment ExperimentalEnvironment::generate(const NoiseParams &raw, const HardwareSpecs &specs) {
    NoiseParams params = raw.normalized();
    params.validate();
    specs.validate();
    const size_t n = static_cast<size_t>(specs.num_qubits);
    std::vector<std::vector<double>> qubit_traces(n);
    for (size_t q = 0; q < n; ++q) {
        qubit_traces[q] = generate_trace(params.type, params.t2s, params.duration, params.segment_duration,
                                         derive_seed(params.seed, q));
    }
    std::vector<std::vector<double>> pair_traces;
    if (params.tjs && n > 1) {
        pair_traces.resize(n - 1);
        for (size_t p = 0; p + 1 < n; ++p) {
            pair_traces[p] = generate_trace(params.type, *params.tjs, params.duration, params.segment_duration,
                                            derive_seed(params.seed, kExchangeStreamTag | kPairStreamTag | p));
        }
    }
    return ExperimentalEnvironment(params, specs, std::move(qubit_traces), std::move(pair_traces));
}

ExperimentalEnvironment::ExperimentalEnvironment(NoiseParams params, HardwareSpecs specs,
                                                 std::vector<std::vector<double>> qubit_traces,
                                                 std::vector<std::vector<double>> pair_traces)
    : params_(params), specs_(specs), qubit_traces_(std::move(qubit_traces)), pair_traces_(std::move(pair_traces)) {
    for (const auto &t : qubit_traces_) {
        if (static_cast<int>(t.size()) != params_.duration) {
            throw Error(ErrorCode::InvalidParams, "qubit trace length differs from duration");
        }
    }
    for (const auto &t : pair_traces_) {
        if (static_cast<int>(t.size()) != params_.duration) {
            throw Error(ErrorCode::InvalidParams, "pair trace length differs from duration");
        }
    }
}

std::span<const double> ExperimentalEnvironment::qubit_trace(int q) const {
    if (q < 0 || q >= num_qubits()) {
        throw Error(ErrorCode::QubitOutOfRange, "no noise trace for qubit " + std::to_string(q));
    }
    return qubit_traces_[static_cast<size_t>(q)];
}

std::span<const double> ExperimentalEnvironment::pair_trace(int lo) const {
    if (pair_traces_.empty()) {
        throw Error(ErrorCode::NoExchangeNoise, "environment has no exchange traces");
    }
    if (lo < 0 || lo >= static_cast<int>(pair_traces_.size())) {
        throw Error(ErrorCode::QubitOutOfRange, "no exchange trace for pair " + std::to_string(lo));
    }
    return pair_traces_[static_cast<size_t>(lo)];
}

void ExperimentalEnvironment::require_window(int start, int length) const {
    if (start < 0 || length < 0 || static_cast<long long>(start) + length > params_.duration) {
        throw Error(ErrorCode::EnvironmentExhausted, "window [" + std::to_string(start) + ", " +
                                                         std::to_string(static_cast<long long>(start) + length) +
                                                         ") exceeds duration " + std::to_string(params_.duration));
    }
}

void ExperimentalEnvironment::advance_cursor(int dt) {
    if (dt <= 0) {
        throw Error(ErrorCode::InvalidArgument, "cursor increment must be positive");
    }
    require_window(cursor_, dt);
    cursor_ += dt;
}

std::vector<double> exchange_distortion(std::span<const double> j_wave, std::span<const double> eps_window,
                                        double j_max) {
    if (eps_window.size() < j_wave.size()) {
        throw Error(ErrorCode::TraceMissing, "exchange trace shorter than the J waveform");
    }
    std::vector<double> out(j_wave.size());
    for (size_t k = 0; k < j_wave.size(); ++k) {
        out[k] = j_wave[k] + (j_wave[k] / j_max) * eps_window[k];
    }
    return out;
}

std::vector<double> exchange_distortion(std::span<const double> j_wave, int pair_lo, int window_start,
                                        const ExperimentalEnvironment &env) {
    if (!env.has_exchange_noise()) {
        throw Error(ErrorCode::NoExchangeNoise, "environment was generated without tjs");
    }
    env.require_window(window_start, static_cast<int>(j_wave.size()));
    auto trace = env.pair_trace(pair_lo).subspan(static_cast<size_t>(window_start), j_wave.size());
    return exchange_distortion(j_wave, trace, env.specs().j_max);
}

}  // namespace spinpulse
