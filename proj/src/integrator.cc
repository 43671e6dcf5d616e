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

#include "spinpulse/integrator.h"

#include <cmath>

#include "spinpulse/circuit.h"
#include "spinpulse/error.h"
#include "spinpulse/noise.h"

namespace spinpulse {

namespace {

// Per-step control fields of one sequence.
struct Fields {
    std::vector<double> b, phi, z, j;
};

Fields expand(const PulseSequence &seq) {
    const size_t n = static_cast<size_t>(seq.duration());
    Fields f{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
             std::vector<double>(n, 0.0)};
    size_t t = 0;
    for (const auto &inst : seq.instructions) {
        if (const auto *rot = std::get_if<Rotation>(&inst)) {
            for (double w : rot->waveform) {
                switch (rot->axis) {
                    case Axis::X:
                    case Axis::Y:
                        f.b[t] = w;
                        f.phi[t] = rot->phase;
                        break;
                    case Axis::Z:
                        f.z[t] = w;
                        break;
                    case Axis::ZZ:
                        f.j[t] = w;
                        break;
                }
                ++t;
            }
        } else {
            t += static_cast<size_t>(std::get<Idle>(inst).duration);
        }
    }
    return f;
}

const std::vector<double> *usable_trace(const PulseSequence &seq, bool enabled) {
    if (!enabled || !seq.time_trace) {
        return nullptr;
    }
    if (static_cast<int>(seq.time_trace->size()) != seq.duration()) {
        throw Error(ErrorCode::TraceMissing, "time trace length differs from sequence duration");
    }
    return &*seq.time_trace;
}

// Adds qubit noise to the Z field where gating allows it.
void add_qubit_noise(Fields &f, const PulseSequence &seq, const NoiseGating &gating) {
    const auto *eps = usable_trace(seq, gating.qubit_noise_on);
    if (!eps) {
        return;
    }
    for (size_t t = 0; t < f.z.size(); ++t) {
        if (gating.noise_during_drive || f.b[t] == 0.0) {
            f.z[t] += (*eps)[t];
        }
    }
}

// exp(-i (hx X + hy Y + hz Z)).
Mat2 su2_step(double hx, double hy, double hz) {
    const double r = std::sqrt(hx * hx + hy * hy + hz * hz);
    Mat2 u;
    if (r == 0.0) {
        return Mat2::Identity();
    }
    const double c = std::cos(r);
    const double s = std::sin(r) / r;
    u(0, 0) = cplx(c, -s * hz);
    u(1, 1) = cplx(c, s * hz);
    u(0, 1) = cplx(-s * hy, -s * hx);
    u(1, 0) = cplx(s * hy, -s * hx);
    return u;
}

Mat4 heisenberg_term(double j) {
    Mat4 h = Mat4::Zero();
    h(0, 0) = h(3, 3) = j / 2;
    h(1, 1) = h(2, 2) = -j / 2;
    h(1, 2) = h(2, 1) = j;
    return h;
}

Mat4 eig_step(const Mat4 &h) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(h);
    const auto &v = es.eigenvectors();
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k) {
        phases(k) = std::exp(-kI * es.eigenvalues()(k));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

// Step with only Z fields on the pair: |00> and |11> are eigenstates and
// {|01>, |10>} forms an SU(2) block.
Mat4 block_step(double j, double a, double b) {
    Mat4 u = Mat4::Zero();
    u(0, 0) = std::exp(-kI * (j / 2 + (a + b) / 2));
    u(3, 3) = std::exp(-kI * (j / 2 - (a + b) / 2));
    Mat2 blk = std::exp(kI * (j / 2)) * su2_step(j, 0.0, (a - b) / 2);
    u.block<2, 2>(1, 1) = blk;
    return u;
}

}  // namespace

Mat2 integrate_sequence(const PulseSequence &seq, const NoiseGating &gating) {
    if (seq.is_pair()) {
        throw Error(ErrorCode::InvalidArgument, "integrate_sequence takes single-qubit sequences; use integrate_pair");
    }
    Fields f = expand(seq);
    add_qubit_noise(f, seq, gating);
    Mat2 u = Mat2::Identity();
    for (size_t t = 0; t < f.b.size(); ++t) {
        double half_b = f.b[t] / 2;
        u = su2_step(half_b * std::cos(f.phi[t]), half_b * std::sin(f.phi[t]), f.z[t] / 2) * u;
    }
    return u;
}

Mat4 integrate_pair(const PulseSequence &pair, const PulseSequence &lo, const PulseSequence &hi,
                    const NoiseGating &gating, double j_max, PairMethod method) {
    const int n = pair.duration();
    if (lo.duration() != n || hi.duration() != n) {
        throw Error(ErrorCode::InvalidArgument, "pair and qubit sequences differ in duration");
    }
    Fields fp = expand(pair);
    Fields fl = expand(lo);
    Fields fh = expand(hi);
    add_qubit_noise(fl, lo, gating);
    add_qubit_noise(fh, hi, gating);
    if (const auto *eps = usable_trace(pair, gating.exchange_noise_on)) {
        fp.j = exchange_distortion(fp.j, *eps, j_max);
    }

    bool transverse = false;
    for (int t = 0; t < n && !transverse; ++t) {
        transverse = fl.b[static_cast<size_t>(t)] != 0.0 || fh.b[static_cast<size_t>(t)] != 0.0;
    }
    const bool general = transverse || method == PairMethod::Eigendecompose;

    Mat4 u = Mat4::Identity();
    for (size_t t = 0; t < static_cast<size_t>(n); ++t) {
        Mat4 step;
        if (general) {
            Mat2 hl = fl.b[t] / 2 * (std::cos(fl.phi[t]) * pauli::x() + std::sin(fl.phi[t]) * pauli::y()) +
                      fl.z[t] / 2 * pauli::z();
            Mat2 hh = fh.b[t] / 2 * (std::cos(fh.phi[t]) * pauli::x() + std::sin(fh.phi[t]) * pauli::y()) +
                      fh.z[t] / 2 * pauli::z();
            Mat4 h = heisenberg_term(fp.j[t]) + kron(hl, Mat2::Identity()) + kron(Mat2::Identity(), hh);
            step = eig_step(h);
        } else {
            step = block_step(fp.j[t], fl.z[t], fh.z[t]);
        }
        u = step * u;
    }
    return u;
}

AppliedCircuit to_circuit(const PulseCircuit &pc, const NoiseGating &gating) {
    AppliedCircuit ac;
    ac.num_qubits = pc.num_qubits;
    ac.initial_layout = pc.initial_layout;
    ac.final_layout = pc.final_layout;
    for (const auto &layer : pc.layers) {
        std::vector<AppliedGate> gates;
        for (int q = 0; q < pc.num_qubits; ++q) {
            const PulseSequence *pair = layer.pair_on(q);
            if (!pair) {
                gates.push_back({{q}, integrate_sequence(layer.single_qubit_seqs[static_cast<size_t>(q)], gating)});
            } else if (pair->targets[0] == q) {
                gates.push_back({pair->targets,
                                 integrate_pair(*pair, layer.single_qubit_seqs[static_cast<size_t>(q)],
                                                layer.single_qubit_seqs[static_cast<size_t>(q) + 1], gating,
                                                pc.specs.j_max)});
            }
        }
        ac.layers.push_back(std::move(gates));
    }
    return ac;
}

Mat4 adiabatic_oracle(const PulseSequence &pair, const PulseSequence &lo, const PulseSequence &hi) {
    const int n = pair.duration();
    if (lo.duration() != n || hi.duration() != n) {
        throw Error(ErrorCode::InvalidArgument, "pair and qubit sequences differ in duration");
    }
    Fields fp = expand(pair);
    Fields fl = expand(lo);
    Fields fh = expand(hi);
    // Accumulated phase of each basis state |q_lo q_hi>, sign of Z is +1 for bit 0.
    double phase[4] = {0, 0, 0, 0};
    for (size_t t = 0; t < static_cast<size_t>(n); ++t) {
        const double j = fp.j[t];
        const double a = fl.z[t];
        const double b = fh.z[t];
        double stark = 0.0;
        if (j != 0.0) {
            if (a == b) {
                throw Error(ErrorCode::AdiabaticityViolation, "exchange on while the detunings coincide");
            }
            stark = j * j / (2 * (a - b));
        }
        for (int s = 0; s < 4; ++s) {
            const double zl = (s & 2) ? -1.0 : 1.0;
            const double zh = (s & 1) ? -1.0 : 1.0;
            phase[s] += j / 2 * zl * zh + a / 2 * zl + b / 2 * zh + stark * (zl - zh);
        }
    }
    Mat4 u = Mat4::Zero();
    for (int s = 0; s < 4; ++s) {
        u(s, s) = std::exp(-kI * phase[s]);
    }
    return u;
}

MatX applied_unitary(const AppliedCircuit &ac) {
    if (ac.num_qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::TooManyQubits, "dense unitary limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const long dim = 1L << ac.num_qubits;
    MatX u = MatX::Identity(dim, dim);
    for (const auto &layer : ac.layers) {
        for (const auto &g : layer) {
            if (g.targets.size() == 1) {
                apply_one_qubit(u, ac.num_qubits, g.targets[0], g.unitary);
            } else {
                apply_two_qubit(u, ac.num_qubits, g.targets[0], g.targets[1], g.unitary);
            }
        }
    }
    return u;
}

nlohmann::json applied_to_json(const AppliedCircuit &ac) {
    using nlohmann::json;
    json layers = json::array();
    for (const auto &layer : ac.layers) {
        json gates = json::array();
        for (const auto &g : layer) {
            json m = json::array();
            for (long r = 0; r < g.unitary.rows(); ++r) {
                for (long c = 0; c < g.unitary.cols(); ++c) {
                    m.push_back(json::array({g.unitary(r, c).real(), g.unitary(r, c).imag()}));
                }
            }
            gates.push_back(json{{"targets", g.targets}, {"unitary", m}});
        }
        layers.push_back(std::move(gates));
    }
    return json{{"num_qubits", ac.num_qubits},
                {"initial_layout", ac.initial_layout},
                {"final_layout", ac.final_layout},
                {"layers", layers}};
}

}  // namespace spinpulse
