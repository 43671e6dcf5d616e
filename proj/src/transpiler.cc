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

#include "spinpulse/transpiler.h"

#include <cstdlib>
#include <numbers>
#include <numeric>

#include "spinpulse/error.h"

namespace spinpulse {

namespace {

constexpr double kPi = std::numbers::pi;

class NativeEmitter {
   public:
    explicit NativeEmitter(Circuit &out) : out_(out) {}

    void rx(int q, double a) { out_.gates.push_back(make_gate(GateKind::RX, {q}, a)); }
    void ry(int q, double a) { out_.gates.push_back(make_gate(GateKind::RY, {q}, a)); }
    void rz(int q, double a) { out_.gates.push_back(make_gate(GateKind::RZ, {q}, a)); }

    // H = RY(pi/2) RZ(pi), up to phase.
    void h(int q) {
        rz(q, kPi);
        ry(q, kPi / 2);
    }

    void rzz(int a, int b, double theta) {
        int lo = std::min(a, b);
        int hi = std::max(a, b);
        for (int half = 0; half < 2; ++half) {
            rx(lo, kPi);
            rx(hi, kPi);
            out_.gates.push_back(make_echo_half(lo, hi, theta / 2));
        }
    }

    // CZ = (RZ(pi/2) x RZ(pi/2)) RZZ(-pi/2), up to phase.
    void cz(int a, int b) {
        rzz(a, b, -kPi / 2);
        rz(a, kPi / 2);
        rz(b, kPi / 2);
    }

    void cx(int c, int t) {
        h(t);
        cz(c, t);
        h(t);
    }

    void swap(int a, int b) {
        cx(a, b);
        cx(b, a);
        cx(a, b);
    }

   private:
    Circuit &out_;
};

}  // namespace

bool is_native(const Circuit &c) {
    for (const Gate &g : c.gates) {
        switch (g.kind) {
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
                break;
            case GateKind::RZZ:
                if (std::abs(g.qubits[0] - g.qubits[1]) != 1) {
                    return false;
                }
                break;
            default:
                return false;
        }
    }
    return true;
}

IsaCircuit gate_transpile(const Circuit &c, const HardwareSpecs &specs) {
    c.validate();
    specs.validate();
    IsaCircuit isa;
    isa.circuit.num_qubits = c.num_qubits;
    isa.initial_layout.resize(static_cast<size_t>(c.num_qubits));
    std::iota(isa.initial_layout.begin(), isa.initial_layout.end(), 0);

    // position[logical] = physical, occupant[physical] = logical
    std::vector<int> position = isa.initial_layout;
    std::vector<int> occupant = isa.initial_layout;
    NativeEmitter emit(isa.circuit);

    for (const Gate &g : c.gates) {
        if (g.qubits.size() == 1) {
            int q = position[static_cast<size_t>(g.qubits[0])];
            switch (g.kind) {
                case GateKind::X:
                    emit.rx(q, kPi);
                    break;
                case GateKind::Y:
                    emit.rz(q, kPi);
                    emit.rx(q, kPi);
                    break;
                case GateKind::Z:
                    emit.rz(q, kPi);
                    break;
                case GateKind::H:
                    emit.h(q);
                    break;
                case GateKind::S:
                    emit.rz(q, kPi / 2);
                    break;
                case GateKind::T:
                    emit.rz(q, kPi / 4);
                    break;
                case GateKind::RX:
                    emit.rx(q, g.angle);
                    break;
                case GateKind::RY:
                    emit.ry(q, g.angle);
                    break;
                case GateKind::RZ:
                    emit.rz(q, g.angle);
                    break;
                default:
                    throw Error(ErrorCode::ArityMismatch, "unexpected single-qubit kind");
            }
            continue;
        }

        // Greedy routing: walk the lower physical index up until the pair is adjacent.
        int pa = position[static_cast<size_t>(g.qubits[0])];
        int pb = position[static_cast<size_t>(g.qubits[1])];
        int lo = std::min(pa, pb);
        int hi = std::max(pa, pb);
        while (hi - lo > 1) {
            emit.swap(lo, lo + 1);
            int la = occupant[static_cast<size_t>(lo)];
            int lb = occupant[static_cast<size_t>(lo + 1)];
            std::swap(occupant[static_cast<size_t>(lo)], occupant[static_cast<size_t>(lo + 1)]);
            position[static_cast<size_t>(la)] = lo + 1;
            position[static_cast<size_t>(lb)] = lo;
            ++lo;
        }
        pa = position[static_cast<size_t>(g.qubits[0])];
        pb = position[static_cast<size_t>(g.qubits[1])];

        switch (g.kind) {
            case GateKind::CX:
                emit.cx(pa, pb);
                break;
            case GateKind::CZ:
                emit.cz(pa, pb);
                break;
            case GateKind::SWAP:
                emit.swap(pa, pb);
                break;
            case GateKind::RZZ:
                if (g.echo_half) {
                    isa.circuit.gates.push_back(make_echo_half(std::min(pa, pb), std::max(pa, pb), g.angle));
                } else {
                    emit.rzz(pa, pb, g.angle);
                }
                break;
            default:
                throw Error(ErrorCode::ArityMismatch, "unexpected two-qubit kind");
        }
    }
    isa.final_layout = position;
    return isa;
}

MatX layout_permutation(const std::vector<int> &layout) {
    const int n = static_cast<int>(layout.size());
    const Eigen::Index dim = Eigen::Index{1} << n;
    MatX p = MatX::Zero(dim, dim);
    for (Eigen::Index in = 0; in < dim; ++in) {
        Eigen::Index out = 0;
        for (int q = 0; q < n; ++q) {
            if ((in >> (n - 1 - q)) & 1) {
                out |= Eigen::Index{1} << (n - 1 - layout[static_cast<size_t>(q)]);
            }
        }
        p(out, in) = 1;
    }
    return p;
}

}  // namespace spinpulse
