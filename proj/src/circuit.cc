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

#include "spinpulse/circuit.h"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spinpulse/error.h"

namespace spinpulse {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    bool rotation;
};

constexpr std::array<KindInfo, 13> kKinds = {{
    {GateKind::X, "x", 1, false},
    {GateKind::Y, "y", 1, false},
    {GateKind::Z, "z", 1, false},
    {GateKind::H, "h", 1, false},
    {GateKind::S, "s", 1, false},
    {GateKind::T, "t", 1, false},
    {GateKind::RX, "rx", 1, true},
    {GateKind::RY, "ry", 1, true},
    {GateKind::RZ, "rz", 1, true},
    {GateKind::CX, "cx", 2, false},
    {GateKind::CZ, "cz", 2, false},
    {GateKind::SWAP, "swap", 2, false},
    {GateKind::RZZ, "rzz", 2, true},
}};

constexpr std::string_view kEchoHalfMnemonic = "rzz_half";

const KindInfo &info(GateKind kind) { return kKinds[static_cast<size_t>(kind)]; }

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::string at_line(size_t line_no, std::string_view line) {
    std::ostringstream out;
    out << "line " << line_no << ": '" << line << "'";
    return out.str();
}

Mat2 single_qubit_matrix(const Gate &g) {
    const double pi = std::numbers::pi;
    switch (g.kind) {
        case GateKind::X:
            return pauli::x();
        case GateKind::Y:
            return pauli::y();
        case GateKind::Z:
            return pauli::z();
        case GateKind::H:
            return (pauli::x() + pauli::z()) / std::sqrt(2.0);
        case GateKind::S: {
            Mat2 m = Mat2::Identity();
            m(1, 1) = kI;
            return m;
        }
        case GateKind::T: {
            Mat2 m = Mat2::Identity();
            m(1, 1) = std::exp(kI * (pi / 4));
            return m;
        }
        case GateKind::RX:
            return rx(g.angle);
        case GateKind::RY:
            return ry(g.angle);
        case GateKind::RZ:
            return rz(g.angle);
        default:
            break;
    }
    throw Error(ErrorCode::ArityMismatch, "not a single-qubit gate");
}

Mat4 two_qubit_matrix(const Gate &g) {
    Mat4 m = Mat4::Zero();
    switch (g.kind) {
        case GateKind::CX:
            m(0, 0) = m(1, 1) = 1;
            m(2, 3) = m(3, 2) = 1;
            return m;
        case GateKind::CZ:
            m(0, 0) = m(1, 1) = m(2, 2) = 1;
            m(3, 3) = -1;
            return m;
        case GateKind::SWAP:
            m(0, 0) = m(3, 3) = 1;
            m(1, 2) = m(2, 1) = 1;
            return m;
        case GateKind::RZZ:
            return rzz(g.angle);
        default:
            break;
    }
    throw Error(ErrorCode::ArityMismatch, "not a two-qubit gate");
}

}  // namespace

bool is_rotation(GateKind kind) { return info(kind).rotation; }

int arity(GateKind kind) { return info(kind).arity; }

std::string_view mnemonic(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view name) {
    for (const auto &k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    return std::nullopt;
}

Gate make_gate(GateKind kind, std::vector<int> qubits, double angle) {
    return Gate{kind, std::move(qubits), is_rotation(kind) ? angle : 0.0, false};
}

Gate make_echo_half(int q0, int q1, double angle) { return Gate{GateKind::RZZ, {q0, q1}, angle, true}; }

MatX gate_matrix(const Gate &gate) {
    if (arity(gate.kind) == 1) {
        return single_qubit_matrix(gate);
    }
    return two_qubit_matrix(gate);
}

void Circuit::validate() const {
    if (num_qubits <= 0) {
        throw Error(ErrorCode::MalformedHeader, "num_qubits must be positive");
    }
    for (size_t k = 0; k < gates.size(); ++k) {
        const Gate &g = gates[k];
        if (static_cast<int>(g.qubits.size()) != arity(g.kind)) {
            throw Error(ErrorCode::ArityMismatch, "gate " + std::to_string(k));
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= num_qubits) {
                throw Error(ErrorCode::QubitOutOfRange, "gate " + std::to_string(k));
            }
        }
        if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
            throw Error(ErrorCode::ArityMismatch, "gate " + std::to_string(k) + " repeats a qubit");
        }
        if (!std::isfinite(g.angle)) {
            throw Error(ErrorCode::InvalidArgument, "gate " + std::to_string(k) + " has a non-finite angle");
        }
        if (g.echo_half && g.kind != GateKind::RZZ) {
            throw Error(ErrorCode::InvalidArgument, "echo marker on a non-RZZ gate");
        }
    }
}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::string_view line = raw;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto tokens = split_ws(line);

        if (!have_header) {
            std::optional<int> n;
            if (tokens.size() == 2 && tokens[0] == "qubits") {
                n = parse_number<int>(tokens[1]);
            }
            if (!n || *n <= 0) {
                throw Error(ErrorCode::MalformedHeader, at_line(line_no, raw));
            }
            circuit.num_qubits = *n;
            have_header = true;
            continue;
        }

        bool echo = tokens[0] == kEchoHalfMnemonic;
        auto kind = echo ? std::optional<GateKind>(GateKind::RZZ) : gate_kind_from_mnemonic(tokens[0]);
        if (!kind) {
            throw Error(ErrorCode::UnknownGate, at_line(line_no, raw));
        }
        const size_t n_qubits = static_cast<size_t>(arity(*kind));
        const size_t expected = 1 + n_qubits + (is_rotation(*kind) ? 1 : 0);
        if (tokens.size() != expected) {
            throw Error(ErrorCode::ArityMismatch, at_line(line_no, raw));
        }
        Gate gate{*kind, {}, 0.0, echo};
        for (size_t k = 0; k < n_qubits; ++k) {
            auto q = parse_number<int>(tokens[1 + k]);
            if (!q) {
                throw Error(ErrorCode::ArityMismatch, at_line(line_no, raw));
            }
            if (*q < 0 || *q >= circuit.num_qubits) {
                throw Error(ErrorCode::QubitOutOfRange, at_line(line_no, raw));
            }
            gate.qubits.push_back(*q);
        }
        if (n_qubits == 2 && gate.qubits[0] == gate.qubits[1]) {
            throw Error(ErrorCode::ArityMismatch, at_line(line_no, raw));
        }
        if (is_rotation(*kind)) {
            auto angle = parse_number<double>(tokens.back());
            if (!angle || !std::isfinite(*angle)) {
                throw Error(ErrorCode::InvalidArgument, at_line(line_no, raw));
            }
            gate.angle = *angle;
        }
        circuit.gates.push_back(std::move(gate));
    }
    if (!have_header) {
        throw Error(ErrorCode::MalformedHeader, "missing 'qubits <N>' header");
    }
    return circuit;
}

std::string serialize_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << '\n';
    for (const Gate &g : circuit.gates) {
        out << (g.echo_half ? kEchoHalfMnemonic : mnemonic(g.kind));
        for (int q : g.qubits) {
            out << ' ' << q;
        }
        if (is_rotation(g.kind)) {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), g.angle);
            out << ' ' << std::string_view(buf, static_cast<size_t>(ptr - buf));
        }
        out << '\n';
    }
    return out.str();
}

MatX circuit_unitary(const Circuit &circuit) {
    if (circuit.num_qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::TooManyQubits, std::to_string(circuit.num_qubits) + " qubits");
    }
    circuit.validate();
    const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits;
    MatX u = MatX::Identity(dim, dim);
    for (const Gate &g : circuit.gates) {
        if (g.qubits.size() == 1) {
            apply_one_qubit(u, circuit.num_qubits, g.qubits[0], single_qubit_matrix(g));
        } else {
            apply_two_qubit(u, circuit.num_qubits, g.qubits[0], g.qubits[1], two_qubit_matrix(g));
        }
    }
    return u;
}

}  // namespace spinpulse
