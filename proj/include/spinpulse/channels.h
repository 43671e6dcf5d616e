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

#ifndef SPINPULSE_CHANNELS_H
#define SPINPULSE_CHANNELS_H

#include <string>
#include <vector>

#include "spinpulse/integrator.h"
#include "spinpulse/linalg.h"
#include "spinpulse/noise.h"
#include "spinpulse/pulse.h"

namespace spinpulse {

/// Channel matrix S acting on column-stacked density matrices, vec(A rho B) = (B^T kron A) vec(rho).
/// `std_error` holds the standard error of the real and imaginary parts of each entry.
struct Superoperator {
    int d = 2;
    MatX matrix;
    MatX std_error;
    int n_samples = 0;
};

/// chi_ij in the Pauli-string basis (I, X, Y, Z per qubit, qubit 0 most significant),
/// so that S = sum_ij chi_ij P_j^T kron P_i.
struct ChiMatrix {
    int d = 2;
    MatX matrix;
    MatX std_error;
    int n_samples = 0;
};

struct FidelityReport {
    double process_fidelity = 0.0;
    double average_fidelity = 0.0;
    int n_samples = 0;
    double std_error = 0.0;          ///< standard error of average_fidelity
    double process_std_error = 0.0;  ///< standard error of process_fidelity
};

struct RamseyCurve {
    std::vector<int> t;
    std::vector<double> contrast;
    std::vector<double> std_error;
    int n_samples = 0;
};

/// Noise-free propagator of a pulse circuit (dense).
MatX pulse_unitary(const PulseCircuit &pc);

/// Dense propagators of n noisy realisations. Realisation k reads the noise window
/// starting at cursor + k * duration; the cursor then advances by n * duration.
/// Results do not depend on `jobs`.
std::vector<MatX> sample_unitaries(const PulseCircuit &pc, ExperimentalEnvironment &env, int n,
                                   const NoiseGating &gating = {}, int jobs = 1);

Superoperator superoperator_of(const std::vector<MatX> &unitaries);
ChiMatrix chi_of(const std::vector<MatX> &unitaries);
FidelityReport fidelity_of(const std::vector<MatX> &unitaries, const MatX &u0);

/// E[conj(u) kron u] over n realisations.
Superoperator mean_channel(const PulseCircuit &pc, ExperimentalEnvironment &env, int n,
                           const NoiseGating &gating = {}, int jobs = 1);

/// Throws DimensionUnsupported unless d is a power of two no larger than 16.
ChiMatrix chi_from_superoperator(const Superoperator &s);
Superoperator superoperator_from_chi(const ChiMatrix &chi);

/// Mean of |Tr(u0^dagger u)|^2 / d^2 over n realisations and the matching average fidelity.
FidelityReport mean_fidelity(const PulseCircuit &pc, ExperimentalEnvironment &env, int n, const MatX &u0,
                             const NoiseGating &gating = {}, int jobs = 1);

/// C(t) = E[cos(sum_{t' < t} eps(t'))] for t = 1 .. t_max, averaged over `n_windows`
/// windows per qubit trace. Window k starts at cursor + k * stride (stride defaults
/// to t_max); the cursor then moves past the last window.
RamseyCurve ramsey_contrast(ExperimentalEnvironment &env, int t_max, int n_windows, int stride = 0);

/// "I", "X", ... labels of the Pauli-string basis, qubit 0 first.
std::vector<std::string> pauli_labels(int num_qubits);

/// Closed-form predictions used as test oracles.
namespace analytic {

double ramsey_quasistatic(double t, double t2s);
double ramsey_white(double t, double t2s);
/// Coherence time of pink noise at time t, 1 / (2 pi sqrt(S0 ln(1 / (f_min t)))).
double pink_t2s_at(double t, double t2s, double f_min);
double ramsey_pink(double t, double t2s, double f_min);
/// Pink curve with the coherence time frozen at its t = 1 value.
double ramsey_pink_constant(double t, double t2s);

/// Single-qubit dephasing with contrast C: chi_II = (1 + C) / 2, chi_ZZ = (1 - C) / 2.
MatX dephasing_chi(double contrast);
double idle_average_fidelity(double contrast);

/// Second-order chi of a square RX(pi) pulse of amplitude b0 under quasi-static
/// noise of standard deviation sigma: chi_XX = 1 - r, chi_ZZ = r with r = sigma^2 / b0^2,
/// and the coherence entries chi_IX = -i pi r / 4, chi_XI = +i pi r / 4.
MatX x_gate_chi(double sigma, double b0);

/// Average fidelity of the echoed RZZ under white noise, (1 + 4 exp(-2 t / t2s)) / 5.
double rzz_white_fidelity(double t, double t2s);
/// Average fidelity of RZZ followed by independent dephasing with spin-echo contrast
/// C_se on both qubits: (4 ((1 + C_se) / 2)^2 + 1) / 5.
double rzz_fidelity_from_echo_contrast(double c_se);
/// Spin-echo contrast of white noise over a window t.
double spin_echo_white(double t, double t2s);

/// Contrast E[exp(i dtheta)] of a Gaussian phase error of the given variance.
double gaussian_phase_contrast(double variance);

}  // namespace analytic

}  // namespace spinpulse

#endif
