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

#ifndef TGROVER_GATES_H
#define TGROVER_GATES_H

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgrover/qmat.h"

namespace tgrover {

enum class Axis { X, Y, Z };

enum class IswapPhase { kPlusI, kMinusI };

/// The frame and sign freedoms that the device description leaves open. Only the
/// end-to-end behaviour of the search pins them down; see the convention search test.
struct Conventions {
    /// Rotation about n by theta is exp(-i * rotation_sign * theta * sigma_n / 2).
    int rotation_sign = +1;
    /// Phase picked up by the exchanged |01>, |10> amplitudes in iSWAP.
    IswapPhase iswap_phase = IswapPhase::kMinusI;
    /// Equatorial axis of the two pi/2 rotations closing the decode step.
    Axis decode_axis = Axis::X;

    Complex iswap_phase_value() const {
        return iswap_phase == IswapPhase::kPlusI ? kImag : -kImag;
    }
    std::string str() const;

    friend bool operator==(const Conventions &, const Conventions &) = default;
};

/// The canonical convention point.
Conventions canonical_conventions();
/// All 8 points of {rotation_sign} x {iswap_phase} x {decode_axis}.
std::array<Conventions, 8> all_conventions();

enum class GateKind { RX, RY, RZ, ISWAP, SQRT_ISWAP, IDLE };
enum class GateTarget { I, II, BOTH };

struct Gate {
    GateKind kind = GateKind::IDLE;
    GateTarget target = GateTarget::BOTH;
    double angle = 0.0;
    double duration_ns = 0.0;

    static Gate rotation(Axis axis, Qubit target, double angle, double duration_ns);
    static Gate iswap(double duration_ns);
    static Gate sqrt_iswap(double duration_ns);
    static Gate idle(double duration_ns);

    bool is_rotation() const {
        return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
    }
    /// Throws std::invalid_argument for a negative duration or a kind/target mismatch.
    void validate() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

class GateSequence {
   public:
    GateSequence() = default;
    explicit GateSequence(std::vector<Gate> gates);

    void push_back(const Gate &g);
    void append(const GateSequence &other);

    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    auto begin() const {
        return gates_.begin();
    }
    auto end() const {
        return gates_.end();
    }
    double total_duration_ns() const;

    friend bool operator==(const GateSequence &, const GateSequence &) = default;

   private:
    std::vector<Gate> gates_;
};

/// Gate durations used when building sequences. The two-qubit durations follow from
/// the coupling strength: a full exchange takes 1/(4g), its square root 1/(8g).
struct GateTimings {
    double single_qubit_ns = 25.0;
    double z_rotation_ns = 5.0;
    double coupling_mhz = 4.6;
    /// Rotations on both qubits within one step share a single time slot.
    bool simultaneous_rotations = true;

    double iswap_ns() const {
        return 1e3 / (4.0 * coupling_mhz);
    }
    double sqrt_iswap_ns() const {
        return 1e3 / (8.0 * coupling_mhz);
    }
    double rotation_ns(Axis axis) const {
        return axis == Axis::Z ? z_rotation_ns : single_qubit_ns;
    }
};

/// Appends one rotation per qubit. When the step is simultaneous the qubit I gate
/// gets zero duration and the qubit II gate carries the slot, so decoherence for the
/// step is applied once, after both rotations.
void append_rotation_layer(GateSequence &seq, Axis axis_i, double angle_i, Axis axis_ii, double angle_ii,
                           const GateTimings &timings);

ComplexMatrix rotation_unitary(Axis axis, double angle, const Conventions &conventions);
ComplexMatrix iswap_unitary(const Conventions &conventions);
ComplexMatrix sqrt_iswap_unitary(const Conventions &conventions);

/// Resonant flip-flop evolution exp(-i 2 pi g t (XX + YY)/2), g in MHz, t in ns.
/// Computed by exponentiating the Hamiltonian; independent of iswap_unitary.
ComplexMatrix coupling_evolution(double g_mhz, double t_ns);

ComplexMatrix gate_unitary(const Gate &gate, const Conventions &conventions);
/// Ordered product; the first gate acts first.
ComplexMatrix sequence_unitary(const GateSequence &seq, const Conventions &conventions);

// Line format: "KIND TARGET ANGLE_RAD DURATION_NS", angle omitted for ISWAP,
// SQRT_ISWAP and IDLE. Blank lines and '#' comments are skipped when parsing.
std::string format_gate(const Gate &gate);
Gate parse_gate(const std::string &line);
void write_sequence_text(std::ostream &out, const GateSequence &seq);
GateSequence parse_sequence_text(std::istream &in);

const char *kind_name(GateKind kind);
const char *target_name(GateTarget target);

}  // namespace tgrover

#endif
