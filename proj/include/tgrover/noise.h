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

#ifndef TGROVER_NOISE_H
#define TGROVER_NOISE_H

#include <vector>

#include "tgrover/gates.h"
#include "tgrover/qmat.h"

namespace tgrover {

/// Per-qubit relaxation and pure-dephasing times in ns, taken at the coupling point.
struct NoiseParams {
    double t1_i_ns = 450.0;
    double t1_ii_ns = 500.0;
    double tphi_i_ns = 2000.0;
    double tphi_ii_ns = 2000.0;
    bool enabled = true;

    static NoiseParams disabled();
    /// Throws std::invalid_argument if enabled with a non-positive time.
    void validate() const;

    double t1(Qubit q) const {
        return q == Qubit::I ? t1_i_ns : t1_ii_ns;
    }
    double tphi(Qubit q) const {
        return q == Qubit::I ? tphi_i_ns : tphi_ii_ns;
    }
};

/// Single-qubit operator-sum representation.
struct KrausChannel {
    std::vector<ComplexMatrix> operators;

    /// Largest entrywise deviation of sum K^dagger K from the identity.
    double completeness_error() const;
    bool is_complete(double tol) const {
        return completeness_error() <= tol;
    }
};

/// Damping probability gamma = 1 - exp(-t/t1).
KrausChannel amplitude_damping(double t_ns, double t1_ns);
/// Off-diagonal elements scale by exp(-t/tphi); populations are untouched.
KrausChannel pure_dephasing(double t_ns, double tphi_ns);

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel, Qubit target);

/// Ideal gate unitary, then damping and dephasing on both qubits for the gate duration.
DensityMatrix evolve_step(const DensityMatrix &rho, const Gate &gate, const NoiseParams &params,
                          const Conventions &conventions);
DensityMatrix evolve_sequence(DensityMatrix rho, const GateSequence &seq, const NoiseParams &params,
                              const Conventions &conventions);

}  // namespace tgrover

#endif
