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

#include "spinpulse/channels.h"

#include <cmath>
#include <numbers>

#include "spinpulse/error.h"
#include "spinpulse/parallel.h"

namespace spinpulse {

namespace {

constexpr double kPi = std::numbers::pi;

// Pauli string as a signed permutation: P|c> = phase[c] |perm[c]>.
struct SparsePauli {
    std::vector<int> perm;
    std::vector<cplx> phase;
};

SparsePauli sparse_pauli(int index, int num_qubits) {
    const int d = 1 << num_qubits;
    SparsePauli p{std::vector<int>(static_cast<size_t>(d)), std::vector<cplx>(static_cast<size_t>(d), 1.0)};
    for (int c = 0; c < d; ++c) {
        int r = c;
        cplx ph = 1.0;
        for (int q = 0; q < num_qubits; ++q) {
            const int kind = (index >> (2 * (num_qubits - 1 - q))) & 3;
            const int bit = 1 << (num_qubits - 1 - q);
            const bool one = (c & bit) != 0;
            switch (kind) {
                case 1:
                    r ^= bit;
                    break;
                case 2:
                    r ^= bit;
                    ph *= one ? -kI : kI;
                    break;
                case 3:
                    ph *= one ? -1.0 : 1.0;
                    break;
                default:
                    break;
            }
        }
        p.perm[static_cast<size_t>(c)] = r;
        p.phase[static_cast<size_t>(c)] = ph;
    }
    return p;
}

int qubits_for_dimension(int d) {
    int n = 0;
    while ((1 << n) < d) {
        ++n;
    }
    if ((1 << n) != d || n < 1 || n > 4) {
        throw Error(ErrorCode::DimensionUnsupported, "chi matrices need d = 2, 4, 8 or 16, got " + std::to_string(d));
    }
    return n;
}

std::vector<SparsePauli> pauli_basis(int n) {
    std::vector<SparsePauli> basis;
    for (int i = 0; i < (1 << (2 * n)); ++i) {
        basis.push_back(sparse_pauli(i, n));
    }
    return basis;
}

// Entry-wise mean and standard error of a list of equally sized matrices.
void mean_and_error(const std::vector<MatX> &samples, MatX &mean, MatX &err) {
    const auto n = static_cast<double>(samples.size());
    mean = MatX::Zero(samples[0].rows(), samples[0].cols());
    Eigen::MatrixXd sq_re = Eigen::MatrixXd::Zero(mean.rows(), mean.cols());
    Eigen::MatrixXd sq_im = sq_re;
    for (const auto &s : samples) {
        mean += s;
    }
    mean /= n;
    for (const auto &s : samples) {
        MatX dev = s - mean;
        sq_re += dev.real().cwiseAbs2();
        sq_im += dev.imag().cwiseAbs2();
    }
    err = MatX::Zero(mean.rows(), mean.cols());
    if (samples.size() > 1) {
        Eigen::MatrixXd se_re = (sq_re / (n - 1) / n).cwiseSqrt();
        Eigen::MatrixXd se_im = (sq_im / (n - 1) / n).cwiseSqrt();
        err.real() = se_re;
        err.imag() = se_im;
    }
}

void require_samples(const std::vector<MatX> &unitaries) {
    if (unitaries.empty()) {
        throw Error(ErrorCode::InvalidArgument, "need at least one realisation");
    }
}

// Sample mean and its standard error.
std::pair<double, double> mean_se(const std::vector<double> &xs) {
    const auto n = static_cast<double>(xs.size());
    double m = 0.0;
    for (double x : xs) {
        m += x;
    }
    m /= n;
    double v = 0.0;
    for (double x : xs) {
        v += (x - m) * (x - m);
    }
    double se = xs.size() > 1 ? std::sqrt(v / (n - 1) / n) : 0.0;
    return {m, se};
}

}  // namespace

MatX pulse_unitary(const PulseCircuit &pc) {
    return applied_unitary(to_circuit(without_time_traces(pc), NoiseGating::all_off()));
}

std::vector<MatX> sample_unitaries(const PulseCircuit &pc, ExperimentalEnvironment &env, int n,
                                   const NoiseGating &gating, int jobs) {
    if (n <= 0) {
        throw Error(ErrorCode::InvalidArgument, "number of realisations must be positive");
    }
    const PulseCircuit bare = without_time_traces(pc);
    const int dur = bare.duration();
    const int start = env.cursor();
    env.require_window(start, n * dur);
    std::vector<MatX> out(static_cast<size_t>(n));
    parallel_for(n, jobs, [&](int k) {
        PulseCircuit noisy = with_time_traces(bare, env, start + k * dur);
        out[static_cast<size_t>(k)] = applied_unitary(to_circuit(noisy, gating));
    });
    if (n * dur > 0) {
        env.advance_cursor(n * dur);
    }
    return out;
}

Superoperator superoperator_of(const std::vector<MatX> &unitaries) {
    require_samples(unitaries);
    std::vector<MatX> samples;
    samples.reserve(unitaries.size());
    for (const auto &u : unitaries) {
        samples.push_back(kron(u.conjugate(), u));
    }
    Superoperator s;
    s.d = static_cast<int>(unitaries[0].rows());
    s.n_samples = static_cast<int>(unitaries.size());
    mean_and_error(samples, s.matrix, s.std_error);
    return s;
}

ChiMatrix chi_of(const std::vector<MatX> &unitaries) {
    require_samples(unitaries);
    const int d = static_cast<int>(unitaries[0].rows());
    const int n = qubits_for_dimension(d);
    const auto basis = pauli_basis(n);
    std::vector<MatX> samples;
    samples.reserve(unitaries.size());
    for (const auto &u : unitaries) {
        // For S = conj(u) kron u, chi = c c^dagger / d^2 with c_i = Tr(P_i u).
        VecX c(static_cast<long>(basis.size()));
        for (size_t i = 0; i < basis.size(); ++i) {
            // Tr(P u) = sum_c phase[c] u(c, perm[c]).
            cplx tr = 0.0;
            for (int col = 0; col < d; ++col) {
                tr += basis[i].phase[static_cast<size_t>(col)] * u(col, basis[i].perm[static_cast<size_t>(col)]);
            }
            c(static_cast<long>(i)) = tr;
        }
        samples.push_back(c * c.adjoint() / static_cast<double>(d * d));
    }
    ChiMatrix chi;
    chi.d = d;
    chi.n_samples = static_cast<int>(unitaries.size());
    mean_and_error(samples, chi.matrix, chi.std_error);
    return chi;
}

FidelityReport fidelity_of(const std::vector<MatX> &unitaries, const MatX &u0) {
    require_samples(unitaries);
    const double d = static_cast<double>(u0.rows());
    std::vector<double> fpro;
    fpro.reserve(unitaries.size());
    for (const auto &u : unitaries) {
        if (u.rows() != u0.rows()) {
            throw Error(ErrorCode::DimensionMismatch, "reference and sample dimensions differ");
        }
        fpro.push_back(process_fidelity(u0, u));
    }
    auto [m, se] = mean_se(fpro);
    FidelityReport r;
    r.process_fidelity = m;
    r.process_std_error = se;
    r.average_fidelity = (d * m + 1) / (d + 1);
    r.std_error = d * se / (d + 1);
    r.n_samples = static_cast<int>(unitaries.size());
    return r;
}

Superoperator mean_channel(const PulseCircuit &pc, ExperimentalEnvironment &env, int n, const NoiseGating &gating,
                           int jobs) {
    return superoperator_of(sample_unitaries(pc, env, n, gating, jobs));
}

ChiMatrix chi_from_superoperator(const Superoperator &s) {
    const int d = s.d;
    const int n = qubits_for_dimension(d);
    if (s.matrix.rows() != d * d || s.matrix.cols() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "superoperator is not d^2 x d^2");
    }
    const auto basis = pauli_basis(n);
    const long m = static_cast<long>(basis.size());
    ChiMatrix chi;
    chi.d = d;
    chi.n_samples = s.n_samples;
    chi.matrix = MatX::Zero(m, m);
    chi.std_error = MatX::Zero(m, m);
    // (P_j^T kron P_i) has entries at (c_a * d + perm_i[c_b], perm_j[c_a] * d + c_b)
    // with value phase_j[c_a] * phase_i[c_b].
    for (long i = 0; i < m; ++i) {
        const auto &pi = basis[static_cast<size_t>(i)];
        for (long j = 0; j < m; ++j) {
            const auto &pj = basis[static_cast<size_t>(j)];
            cplx acc = 0.0;
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    cplx v = pj.phase[static_cast<size_t>(a)] * pi.phase[static_cast<size_t>(b)];
                    acc += std::conj(v) *
                           s.matrix(a * d + pi.perm[static_cast<size_t>(b)], pj.perm[static_cast<size_t>(a)] * d + b);
                }
            }
            chi.matrix(i, j) = acc / static_cast<double>(d * d);
        }
    }
    return chi;
}

Superoperator superoperator_from_chi(const ChiMatrix &chi) {
    const int d = chi.d;
    const int n = qubits_for_dimension(d);
    const auto basis = pauli_basis(n);
    const long m = static_cast<long>(basis.size());
    if (chi.matrix.rows() != m || chi.matrix.cols() != m) {
        throw Error(ErrorCode::DimensionMismatch, "chi matrix is not d^2 x d^2");
    }
    Superoperator s;
    s.d = d;
    s.n_samples = chi.n_samples;
    s.matrix = MatX::Zero(d * d, d * d);
    s.std_error = MatX::Zero(d * d, d * d);
    for (long i = 0; i < m; ++i) {
        const auto &pi = basis[static_cast<size_t>(i)];
        for (long j = 0; j < m; ++j) {
            const cplx x = chi.matrix(i, j);
            if (x == 0.0) {
                continue;
            }
            const auto &pj = basis[static_cast<size_t>(j)];
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    s.matrix(a * d + pi.perm[static_cast<size_t>(b)], pj.perm[static_cast<size_t>(a)] * d + b) +=
                        x * pj.phase[static_cast<size_t>(a)] * pi.phase[static_cast<size_t>(b)];
                }
            }
        }
    }
    return s;
}

FidelityReport mean_fidelity(const PulseCircuit &pc, ExperimentalEnvironment &env, int n, const MatX &u0,
                             const NoiseGating &gating, int jobs) {
    return fidelity_of(sample_unitaries(pc, env, n, gating, jobs), u0);
}

RamseyCurve ramsey_contrast(ExperimentalEnvironment &env, int t_max, int n_windows, int stride) {
    if (t_max <= 0 || n_windows <= 0) {
        throw Error(ErrorCode::InvalidArgument, "Ramsey curve needs t_max > 0 and at least one window");
    }
    if (stride <= 0) {
        stride = t_max;
    }
    const int start = env.cursor();
    const int span = (n_windows - 1) * stride + t_max;
    env.require_window(start, span);

    const size_t tm = static_cast<size_t>(t_max);
    std::vector<double> sum(tm, 0.0), sum_sq(tm, 0.0);
    long samples = 0;
    for (int q = 0; q < env.num_qubits(); ++q) {
        auto trace = env.qubit_trace(q);
        for (int w = 0; w < n_windows; ++w) {
            double phi = 0.0;
            const size_t off = static_cast<size_t>(start + w * stride);
            for (size_t t = 0; t < tm; ++t) {
                phi += trace[off + t];
                const double c = std::cos(phi);
                sum[t] += c;
                sum_sq[t] += c * c;
            }
            ++samples;
        }
    }
    RamseyCurve curve;
    curve.n_samples = static_cast<int>(samples);
    const double ns = static_cast<double>(samples);
    for (size_t t = 0; t < tm; ++t) {
        const double m = sum[t] / ns;
        const double var = samples > 1 ? std::max(0.0, (sum_sq[t] - ns * m * m) / (ns - 1)) : 0.0;
        curve.t.push_back(static_cast<int>(t) + 1);
        curve.contrast.push_back(m);
        curve.std_error.push_back(std::sqrt(var / ns));
    }
    env.advance_cursor(std::min(env.remaining(), n_windows * stride));
    return curve;
}

std::vector<std::string> pauli_labels(int num_qubits) {
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<std::string> out;
    for (int i = 0; i < (1 << (2 * num_qubits)); ++i) {
        std::string s;
        for (int q = 0; q < num_qubits; ++q) {
            s += letters[(i >> (2 * (num_qubits - 1 - q))) & 3];
        }
        out.push_back(s);
    }
    return out;
}

namespace analytic {

double ramsey_quasistatic(double t, double t2s) { return std::exp(-(t * t) / (t2s * t2s)); }

double ramsey_white(double t, double t2s) { return std::exp(-t / t2s); }

double pink_t2s_at(double t, double t2s, double f_min) {
    const double s0 = pink_spectral_intensity(t2s, f_min);
    return 1.0 / (2 * kPi * std::sqrt(s0 * std::log(1.0 / (f_min * t))));
}

double ramsey_pink(double t, double t2s, double f_min) {
    const double tt = pink_t2s_at(t, t2s, f_min);
    return std::exp(-(t * t) / (tt * tt));
}

double ramsey_pink_constant(double t, double t2s) { return ramsey_quasistatic(t, t2s); }

MatX dephasing_chi(double contrast) {
    MatX chi = MatX::Zero(4, 4);
    chi(0, 0) = (1 + contrast) / 2;
    chi(3, 3) = (1 - contrast) / 2;
    return chi;
}

double idle_average_fidelity(double contrast) { return (2 + contrast) / 3; }

MatX x_gate_chi(double sigma, double b0) {
    const double r = sigma * sigma / (b0 * b0);
    MatX chi = MatX::Zero(4, 4);
    chi(1, 1) = 1 - r;
    chi(3, 3) = r;
    chi(0, 1) = -kI * (kPi * r / 4);
    chi(1, 0) = kI * (kPi * r / 4);
    return chi;
}

double rzz_white_fidelity(double t, double t2s) { return (1 + 4 * std::exp(-2 * t / t2s)) / 5; }

double rzz_fidelity_from_echo_contrast(double c_se) {
    const double p = (1 + c_se) / 2;
    return (4 * p * p + 1) / 5;
}

double spin_echo_white(double t, double t2s) { return std::exp(-t / t2s); }

double gaussian_phase_contrast(double variance) { return std::exp(-variance / 2); }

}  // namespace analytic

}  // namespace spinpulse
