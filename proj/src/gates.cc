// Copyright 2026 The transmon-grover Authors
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

#include "tgrover/gates.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "tgrover/errors.h"

namespace tgrover {

namespace {

Pauli axis_pauli(Axis axis) {
    switch (axis) {
        case Axis::X:
            return Pauli::X;
        case Axis::Y:
            return Pauli::Y;
        case Axis::Z:
            return Pauli::Z;
    }
    throw_invalid_argument("unknown axis");
}

Axis kind_axis(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
            return Axis::X;
        case GateKind::RY:
            return Axis::Y;
        case GateKind::RZ:
            return Axis::Z;
        default:
            throw_invalid_argument("gate kind is not a rotation");
    }
}

Qubit target_qubit(GateTarget target) {
    if (target == GateTarget::BOTH) {
        throw_invalid_argument("single-qubit gate cannot target BOTH");
    }
    return target == GateTarget::I ? Qubit::I : Qubit::II;
}

// Swap-subspace matrix [[a, b], [b, a]] on |01>, |10>; identity on |00>, |11>.
ComplexMatrix exchange_matrix(Complex diag, Complex off) {
    ComplexMatrix u = ComplexMatrix::identity(4);
    u(1, 1) = diag;
    u(2, 2) = diag;
    u(1, 2) = off;
    u(2, 1) = off;
    return u;
}

}  // namespace

std::string Conventions::str() const {
    const char *axis = decode_axis == Axis::X ? "X" : decode_axis == Axis::Y ? "Y" : "Z";
    return std::string("rotation_sign=") + (rotation_sign > 0 ? "+1" : "-1") +
           " iswap_phase=" + (iswap_phase == IswapPhase::kPlusI ? "+i" : "-i") + " decode_axis=" + axis;
}

Conventions canonical_conventions() {
    return Conventions{};
}

std::array<Conventions, 8> all_conventions() {
    std::array<Conventions, 8> out{};
    std::size_t k = 0;
    for (int sign : {+1, -1}) {
        for (IswapPhase phase : {IswapPhase::kMinusI, IswapPhase::kPlusI}) {
            for (Axis axis : {Axis::X, Axis::Y}) {
                out[k++] = Conventions{sign, phase, axis};
            }
        }
    }
    return out;
}

Gate Gate::rotation(Axis axis, Qubit target, double angle, double duration_ns) {
    static constexpr GateKind kKinds[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
    Gate g{kKinds[static_cast<int>(axis)], target == Qubit::I ? GateTarget::I : GateTarget::II, angle, duration_ns};
    g.validate();
    return g;
}

Gate Gate::iswap(double duration_ns) {
    Gate g{GateKind::ISWAP, GateTarget::BOTH, 0.0, duration_ns};
    g.validate();
    return g;
}

Gate Gate::sqrt_iswap(double duration_ns) {
    Gate g{GateKind::SQRT_ISWAP, GateTarget::BOTH, 0.0, duration_ns};
    g.validate();
    return g;
}

Gate Gate::idle(double duration_ns) {
    Gate g{GateKind::IDLE, GateTarget::BOTH, 0.0, duration_ns};
    g.validate();
    return g;
}

void Gate::validate() const {
    if (!(duration_ns >= 0.0) || !std::isfinite(duration_ns)) {
        throw_invalid_argument("gate duration must be finite and >= 0");
    }
    if (!std::isfinite(angle)) {
        throw_invalid_argument("gate angle must be finite");
    }
    if (is_rotation()) {
        if (target == GateTarget::BOTH) {
            throw_invalid_argument(std::string(kind_name(kind)) + " needs target I or II");
        }
    } else if (target != GateTarget::BOTH) {
        throw_invalid_argument(std::string(kind_name(kind)) + " needs target BOTH");
    }
}

GateSequence::GateSequence(std::vector<Gate> gates) : gates_(std::move(gates)) {
    for (const Gate &g : gates_) {
        g.validate();
    }
}

void GateSequence::push_back(const Gate &g) {
    g.validate();
    gates_.push_back(g);
}

void GateSequence::append(const GateSequence &other) {
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

double GateSequence::total_duration_ns() const {
    double total = 0.0;
    for (const Gate &g : gates_) {
        total += g.duration_ns;
    }
    return total;
}

void append_rotation_layer(GateSequence &seq, Axis axis_i, double angle_i, Axis axis_ii, double angle_ii,
                           const GateTimings &timings) {
    const double slot_i = timings.rotation_ns(axis_i);
    const double slot_ii = timings.rotation_ns(axis_ii);
    if (timings.simultaneous_rotations) {
        seq.push_back(Gate::rotation(axis_i, Qubit::I, angle_i, 0.0));
        seq.push_back(Gate::rotation(axis_ii, Qubit::II, angle_ii, std::max(slot_i, slot_ii)));
    } else {
        seq.push_back(Gate::rotation(axis_i, Qubit::I, angle_i, slot_i));
        seq.push_back(Gate::rotation(axis_ii, Qubit::II, angle_ii, slot_ii));
    }
}

ComplexMatrix rotation_unitary(Axis axis, double angle, const Conventions &conventions) {
    const double half = 0.5 * conventions.rotation_sign * angle;
    ComplexMatrix u = ComplexMatrix::identity(2) * Complex{std::cos(half)};
    u += pauli_matrix(axis_pauli(axis)) * (-kImag * std::sin(half));
    return u;
}

ComplexMatrix iswap_unitary(const Conventions &conventions) {
    return exchange_matrix(0.0, conventions.iswap_phase_value());
}

ComplexMatrix sqrt_iswap_unitary(const Conventions &conventions) {
    const double r = std::sqrt(0.5);
    return exchange_matrix(r, r * conventions.iswap_phase_value());
}

ComplexMatrix coupling_evolution(double g_mhz, double t_ns) {
    if (!(g_mhz > 0.0)) {
        throw_invalid_argument("coupling_evolution: g must be > 0");
    }
    if (!(t_ns >= 0.0)) {
        throw_invalid_argument("coupling_evolution: t must be >= 0");
    }
    ComplexMatrix flip_flop = pauli_operator({Pauli::X, Pauli::X}) + pauli_operator({Pauli::Y, Pauli::Y});
    flip_flop *= 0.5;
    // g [MHz] * t [ns] carries a factor 1e-3.
    return hermitian_exp_neg_i(flip_flop, 2.0 * M_PI * g_mhz * t_ns * 1e-3);
}

ComplexMatrix gate_unitary(const Gate &gate, const Conventions &conventions) {
    gate.validate();
    switch (gate.kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            return embed(rotation_unitary(kind_axis(gate.kind), gate.angle, conventions), target_qubit(gate.target));
        case GateKind::ISWAP:
            return iswap_unitary(conventions);
        case GateKind::SQRT_ISWAP:
            return sqrt_iswap_unitary(conventions);
        case GateKind::IDLE:
            return ComplexMatrix::identity(4);
    }
    throw_invalid_argument("unknown gate kind");
}

ComplexMatrix sequence_unitary(const GateSequence &seq, const Conventions &conventions) {
    ComplexMatrix u = ComplexMatrix::identity(4);
    for (const Gate &g : seq) {
        u = gate_unitary(g, conventions) * u;
    }
    return u;
}

const char *kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::ISWAP:
            return "ISWAP";
        case GateKind::SQRT_ISWAP:
            return "SQRT_ISWAP";
        case GateKind::IDLE:
            return "IDLE";
    }
    return "?";
}

const char *target_name(GateTarget target) {
    switch (target) {
        case GateTarget::I:
            return "I";
        case GateTarget::II:
            return "II";
        case GateTarget::BOTH:
            return "BOTH";
    }
    return "?";
}

std::string format_gate(const Gate &gate) {
    char buf[128];
    if (gate.is_rotation()) {
        std::snprintf(buf, sizeof(buf), "%s %s %.17g %.17g", kind_name(gate.kind), target_name(gate.target),
                      gate.angle + 0.0, gate.duration_ns);
    } else {
        std::snprintf(buf, sizeof(buf), "%s %s %.17g", kind_name(gate.kind), target_name(gate.target),
                      gate.duration_ns);
    }
    return buf;
}

Gate parse_gate(const std::string &line) {
    std::istringstream in(line);
    std::string kind_text;
    std::string target_text;
    in >> kind_text >> target_text;

    Gate g;
    bool found = false;
    for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::ISWAP, GateKind::SQRT_ISWAP,
                       GateKind::IDLE}) {
        if (kind_text == kind_name(k)) {
            g.kind = k;
            found = true;
        }
    }
    if (!found) {
        throw_invalid_argument("unknown gate kind in '" + line + "'");
    }
    if (target_text == "I") {
        g.target = GateTarget::I;
    } else if (target_text == "II") {
        g.target = GateTarget::II;
    } else if (target_text == "BOTH") {
        g.target = GateTarget::BOTH;
    } else {
        throw_invalid_argument("unknown gate target in '" + line + "'");
    }

    std::vector<double> numbers;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            numbers.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::logic_error &) {
            throw_invalid_argument("bad number '" + token + "' in '" + line + "'");
        }
    }
    const std::size_t expected = g.is_rotation() ? 2 : 1;
    if (numbers.size() != expected) {
        throw_invalid_argument("wrong field count in '" + line + "'");
    }
    if (g.is_rotation()) {
        g.angle = numbers[0];
    }
    g.duration_ns = numbers.back();
    g.validate();
    return g;
}

void write_sequence_text(std::ostream &out, const GateSequence &seq) {
    for (const Gate &g : seq) {
        out << format_gate(g) << '\n';
    }
}

GateSequence parse_sequence_text(std::istream &in) {
    GateSequence seq;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        seq.push_back(parse_gate(line));
    }
    return seq;
}

}  // namespace tgrover
