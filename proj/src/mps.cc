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

#include "spinpulse/mps.h"

#include <cmath>

#include "spinpulse/error.h"
#include "spinpulse/parallel.h"
#include "spinpulse/transpiler.h"

namespace spinpulse {

namespace {

Mat4 swap_conjugated(const Mat4 &u) {
    Mat4 swap = Mat4::Zero();
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    return swap * u * swap;
}

int next_power_of_two(long n) {
    int p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

}  // namespace

MpsState MpsState::zero(int num_qubits, int max_bond, double trunc_tol) {
    if (num_qubits < 1) {
        throw Error(ErrorCode::InvalidArgument, "MPS needs at least one qubit");
    }
    if (max_bond < 1 || !(trunc_tol >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "max_bond must be positive and trunc_tol nonnegative");
    }
    MpsState s;
    s.max_bond_ = max_bond;
    s.trunc_tol_ = trunc_tol;
    for (int q = 0; q < num_qubits; ++q) {
        std::array<MatX, 2> site{MatX::Ones(1, 1), MatX::Zero(1, 1)};
        s.sites_.push_back(site);
    }
    return s;
}

std::vector<int> MpsState::bond_dimensions() const {
    std::vector<int> out;
    for (size_t q = 0; q + 1 < sites_.size(); ++q) {
        out.push_back(static_cast<int>(sites_[q][0].cols()));
    }
    return out;
}

void MpsState::apply_one(int q, const Mat2 &u) {
    if (q < 0 || q >= num_qubits()) {
        throw Error(ErrorCode::QubitOutOfRange, "MPS site " + std::to_string(q));
    }
    auto &a = sites_[static_cast<size_t>(q)];
    MatX a0 = u(0, 0) * a[0] + u(0, 1) * a[1];
    MatX a1 = u(1, 0) * a[0] + u(1, 1) * a[1];
    a[0] = std::move(a0);
    a[1] = std::move(a1);
}

void MpsState::move_center(int q) {
    while (center_ < q) {
        auto &a = sites_[static_cast<size_t>(center_)];
        const long dl = a[0].rows();
        const long dr = a[0].cols();
        MatX m(2 * dl, dr);
        m << a[0], a[1];
        Eigen::HouseholderQR<MatX> qr(m);
        const long k = std::min(2 * dl, dr);
        MatX qm = qr.householderQ() * MatX::Identity(2 * dl, k);
        MatX r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
        a[0] = qm.topRows(dl);
        a[1] = qm.bottomRows(dl);
        auto &next = sites_[static_cast<size_t>(center_) + 1];
        next[0] = r * next[0];
        next[1] = r * next[1];
        ++center_;
    }
    while (center_ > q) {
        auto &a = sites_[static_cast<size_t>(center_)];
        const long dl = a[0].rows();
        const long dr = a[0].cols();
        MatX m(dl, 2 * dr);
        m << a[0], a[1];
        // m^dagger = Q R, so m = R^dagger Q^dagger.
        Eigen::HouseholderQR<MatX> qr(m.adjoint());
        const long k = std::min(2 * dr, dl);
        MatX qm = qr.householderQ() * MatX::Identity(2 * dr, k);
        MatX r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
        MatX qd = qm.adjoint();
        a[0] = qd.leftCols(dr);
        a[1] = qd.rightCols(dr);
        MatX rd = r.adjoint();
        auto &prev = sites_[static_cast<size_t>(center_) - 1];
        prev[0] = prev[0] * rd;
        prev[1] = prev[1] * rd;
        --center_;
    }
}

void MpsState::apply_two(int q, const Mat4 &u) {
    if (q < 0 || q + 1 >= num_qubits()) {
        throw Error(ErrorCode::QubitOutOfRange, "MPS pair starting at " + std::to_string(q));
    }
    move_center(q);
    auto &left = sites_[static_cast<size_t>(q)];
    auto &right = sites_[static_cast<size_t>(q) + 1];
    const long dl = left[0].rows();
    const long dr = right[0].cols();

    MatX theta[2][2];
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            theta[s1][s2] = left[static_cast<size_t>(s1)] * right[static_cast<size_t>(s2)];
        }
    }
    MatX m = MatX::Zero(2 * dl, 2 * dr);
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            auto block = m.block(s1 * dl, s2 * dr, dl, dr);
            for (int t1 = 0; t1 < 2; ++t1) {
                for (int t2 = 0; t2 < 2; ++t2) {
                    const cplx c = u(2 * s1 + s2, 2 * t1 + t2);
                    if (c != 0.0) {
                        block += c * theta[t1][t2];
                    }
                }
            }
        }
    }

    Eigen::BDCSVD<MatX> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sv = svd.singularValues();
    const double total = sv.squaredNorm();
    long keep = sv.size();
    double dropped = 0.0;
    // Drop the smallest values while their cumulative relative weight stays below trunc_tol.
    while (keep > 1 && (dropped + sv(keep - 1) * sv(keep - 1)) <= trunc_tol_ * total) {
        dropped += sv(keep - 1) * sv(keep - 1);
        --keep;
    }
    while (keep > max_bond_) {
        dropped += sv(keep - 1) * sv(keep - 1);
        --keep;
    }
    if (total > 0) {
        discarded_ += dropped / total;
    }
    Eigen::VectorXd kept = sv.head(keep);
    kept /= kept.norm();

    MatX us = svd.matrixU().leftCols(keep);
    MatX sv_dag = kept.asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
    left[0] = us.topRows(dl);
    left[1] = us.bottomRows(dl);
    right[0] = sv_dag.leftCols(dr);
    right[1] = sv_dag.rightCols(dr);
    center_ = q + 1;
}

double MpsState::norm() const { return std::sqrt(std::abs(overlap(*this, *this))); }

VecX MpsState::to_statevector() const {
    std::vector<MatX> prefixes{MatX::Ones(1, 1)};
    for (const auto &site : sites_) {
        std::vector<MatX> next;
        next.reserve(prefixes.size() * 2);
        for (const auto &p : prefixes) {
            next.push_back(p * site[0]);
            next.push_back(p * site[1]);
        }
        prefixes = std::move(next);
    }
    VecX out(static_cast<long>(prefixes.size()));
    for (size_t i = 0; i < prefixes.size(); ++i) {
        out(static_cast<long>(i)) = prefixes[i](0, 0);
    }
    return out;
}

MpsState mps_apply(const AppliedCircuit &ac, int max_bond, double trunc_tol) {
    MpsState s = MpsState::zero(ac.num_qubits, max_bond, trunc_tol);
    for (const auto &layer : ac.layers) {
        for (const auto &g : layer) {
            if (g.targets.size() == 1) {
                s.apply_one(g.targets[0], g.unitary);
            } else if (g.targets[1] == g.targets[0] + 1) {
                s.apply_two(g.targets[0], g.unitary);
            } else if (g.targets[1] == g.targets[0] - 1) {
                s.apply_two(g.targets[1], swap_conjugated(g.unitary));
            } else {
                throw Error(ErrorCode::NonAdjacentGate, "MPS gates must act on neighbouring sites");
            }
        }
    }
    return s;
}

cplx overlap(const MpsState &a, const MpsState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::SizeMismatch, "states have different qubit counts");
    }
    MatX env = MatX::Ones(1, 1);
    for (int q = 0; q < a.num_qubits(); ++q) {
        const auto &sa = a.site(q);
        const auto &sb = b.site(q);
        env = sa[0].adjoint() * env * sb[0] + sa[1].adjoint() * env * sb[1];
    }
    return env(0, 0);
}

double state_fidelity(const MpsState &a, const MpsState &b) { return std::norm(overlap(a, b)); }

Circuit cluster_circuit(int num_qubits) {
    Circuit c;
    c.num_qubits = num_qubits;
    for (int q = 0; q < num_qubits; ++q) {
        c.gates.push_back(make_gate(GateKind::H, {q}));
    }
    for (int parity = 0; parity < 2; ++parity) {
        for (int q = parity; q + 1 < num_qubits; q += 2) {
            c.gates.push_back(make_gate(GateKind::CZ, {q, q + 1}));
        }
    }
    return c;
}

ClusterRecord cluster_experiment(const ClusterConfig &cfg) {
    const int n = cfg.num_qubits;
    if (n < 2 || n > 128) {
        throw Error(ErrorCode::InvalidArgument, "cluster experiment supports 2 to 128 qubits");
    }
    if (cfg.n_realizations <= 0) {
        throw Error(ErrorCode::InvalidArgument, "number of realisations must be positive");
    }
    HardwareSpecs specs = cfg.specs;
    specs.num_qubits = n;

    const Circuit circuit = cluster_circuit(n);
    AppliedCircuit ideal_ac;
    ideal_ac.num_qubits = n;
    for (const auto &g : circuit.gates) {
        ideal_ac.layers.push_back({AppliedGate{g.qubits, gate_matrix(g)}});
    }
    const MpsState ideal = mps_apply(ideal_ac, cfg.max_bond, cfg.trunc_tol);

    const PulseCircuit pc = schedule(gate_transpile(circuit, specs), specs);
    const int dur = pc.duration();

    NoiseParams np = cfg.noise.normalized();
    // Power-of-two lengths keep the pink-noise FFT fast.
    np.duration = next_power_of_two(std::max<long>(static_cast<long>(cfg.n_realizations) * dur, np.segment_duration));
    ExperimentalEnvironment env = ExperimentalEnvironment::generate(np, specs);

    std::vector<double> fid(static_cast<size_t>(cfg.n_realizations));
    parallel_for(cfg.n_realizations, cfg.jobs, [&](int k) {
        PulseCircuit noisy = with_time_traces(pc, env, k * dur);
        fid[static_cast<size_t>(k)] = state_fidelity(ideal, mps_apply(to_circuit(noisy, cfg.gating), cfg.max_bond,
                                                                      cfg.trunc_tol));
    });

    double mean = 0.0;
    for (double f : fid) {
        mean += f;
    }
    mean /= static_cast<double>(fid.size());
    double var = 0.0;
    for (double f : fid) {
        var += (f - mean) * (f - mean);
    }
    ClusterRecord rec;
    rec.num_qubits = n;
    rec.t2s = np.t2s;
    rec.mean_fidelity = mean;
    rec.n_realizations = cfg.n_realizations;
    rec.std_error = fid.size() > 1 ? std::sqrt(var / static_cast<double>(fid.size() - 1) / static_cast<double>(fid.size()))
                                   : 0.0;
    return rec;
}

}  // namespace spinpulse
