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

#include "tgrover/noise.h"

#include <cmath>

#include "tgrover/errors.h"
#include "tgrover/tolerances.h"

namespace tgrover {

namespace {

void require_times(double t_ns, double characteristic_ns, const char *what) {
    if (!(t_ns >= 0.0)) {
        throw_invalid_argument(std::string(what) + ": duration must be >= 0");
    }
    if (!(characteristic_ns > 0.0)) {
        throw_invalid_argument(std::string(what) + ": characteristic time must be > 0");
    }
}

}  // namespace

NoiseParams NoiseParams::disabled() {
    NoiseParams p;
    p.enabled = false;
    return p;
}

void NoiseParams::validate() const {
    if (!enabled) {
        return;
    }
    for (double t : {t1_i_ns, t1_ii_ns, tphi_i_ns, tphi_ii_ns}) {
        if (!(t > 0.0)) {
            throw_invalid_argument("noise times must be > 0 when noise is enabled");
        }
    }
}

double KrausChannel::completeness_error() const {
    ComplexMatrix sum(2);
    for (const ComplexMatrix &k : operators) {
        sum += k.adjoint() * k;
    }
    return sum.max_abs_diff(ComplexMatrix::identity(2));
}

KrausChannel amplitude_damping(double t_ns, double t1_ns) {
    require_times(t_ns, t1_ns, "amplitude_damping");
    // -expm1 keeps gamma accurate for t << t1.
    const double gamma = -std::expm1(-t_ns / t1_ns);
    const double keep = std::sqrt(1.0 - gamma);
    return KrausChannel{{
        ComplexMatrix(2, {1.0, 0.0, 0.0, keep}),
        ComplexMatrix(2, {0.0, std::sqrt(gamma), 0.0, 0.0}),
    }};
}

KrausChannel pure_dephasing(double t_ns, double tphi_ns) {
    require_times(t_ns, tphi_ns, "pure_dephasing");
    const double lambda = std::exp(-t_ns / tphi_ns);
    return KrausChannel{{
        ComplexMatrix::identity(2) * Complex{std::sqrt(0.5 * (1.0 + lambda))},
        pauli_matrix(Pauli::Z) * Complex{std::sqrt(0.5 * (1.0 - lambda))},
    }};
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel, Qubit target) {
    if (!channel.is_complete(tol::kKrausCompleteness)) {
        throw_invalid_argument("apply_channel: Kraus operators are not complete");
    }
    ComplexMatrix out(4);
    for (const ComplexMatrix &k : channel.operators) {
        const ComplexMatrix big = embed(k, target);
        out += big * rho.matrix() * big.adjoint();
    }
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix evolve_step(const DensityMatrix &rho, const Gate &gate, const NoiseParams &params,
                          const Conventions &conventions) {
    DensityMatrix out = apply_unitary(rho, gate_unitary(gate, conventions));
    if (!params.enabled || gate.duration_ns == 0.0) {
        return out;
    }
    params.validate();
    for (Qubit q : {Qubit::I, Qubit::II}) {
        out = apply_channel(out, amplitude_damping(gate.duration_ns, params.t1(q)), q);
        out = apply_channel(out, pure_dephasing(gate.duration_ns, params.tphi(q)), q);
    }
    return out;
}

DensityMatrix evolve_sequence(DensityMatrix rho, const GateSequence &seq, const NoiseParams &params,
                              const Conventions &conventions) {
    for (const Gate &g : seq) {
        rho = evolve_step(rho, g, params, conventions);
    }
    return rho;
}

}  // namespace tgrover
