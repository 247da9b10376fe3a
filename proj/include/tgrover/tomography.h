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

#ifndef TGROVER_TOMOGRAPHY_H
#define TGROVER_TOMOGRAPHY_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tgrover/gates.h"
#include "tgrover/noise.h"
#include "tgrover/qmat.h"
#include "tgrover/readout.h"

namespace tgrover {

/// Either finite-shot sampling with a seed, or the exact outcome distribution.
struct Sampling {
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;

    static Sampling exact() {
        return {};
    }
    static Sampling with_shots(std::uint64_t shots, std::uint64_t seed) {
        return {shots, seed};
    }
    bool is_exact() const {
        return !shots.has_value();
    }
};

struct PauliEstimates {
    /// Statistical slack allowed beyond [-1, 1] after readout correction.
    static constexpr double kSlack = 0.2;

    std::map<PauliLabel, double> values;
    /// Empty for the exact-distribution path.
    std::optional<std::uint64_t> shots_per_setting;
};

struct ReconstructionResult {
    /// Linear-inversion estimate; Hermitian with unit trace but possibly not PSD.
    ComplexMatrix raw;
    /// Closest physical state to `raw` in Hilbert-Schmidt distance.
    DensityMatrix physical;
    double distance_moved;
};

struct TomographyOptions {
    GateTimings timings;
    /// Apply the pre-measurement rotations without decoherence even when noise is on.
    bool ideal_prerotations = false;
    unsigned threads = 1;
};

/// Rotations taking the measurement of `label` onto the computational basis:
/// an X factor gets a Y rotation, a Y factor an X rotation, Z and I nothing.
/// The rotation angles are chosen so that U^dagger (Z) U equals the measured Pauli
/// under `conventions`.
GateSequence prerotation_sequence(PauliLabel label, const Conventions &conventions, const GateTimings &timings = {});

/// Sign-weighted sum of a computational-basis distribution: +1 for bit 0, -1 for
/// bit 1, per non-identity factor of `label`.
double parity_expectation(const Distribution &p, PauliLabel label);

/// One simulated run per setting: prerotate, read out through R, sample (or take the
/// exact distribution), correct with R^{-1}, convert to an expectation value. Setting k
/// of the extended Pauli set draws from derive_seed(sampling.seed, k).
PauliEstimates simulate_pauli_estimates(const DensityMatrix &rho, const ReadoutMatrix &r, const Sampling &sampling,
                                        const Conventions &conventions, const NoiseParams &noise,
                                        const TomographyOptions &options = {});

/// (I + sum_P est_P P) / 4. Throws std::invalid_argument if a label is missing.
ComplexMatrix linear_inversion(const PauliEstimates &est);

/// Closest unit-trace PSD matrix in Frobenius norm. Shares the eigenbasis of `raw`;
/// eigenvalues go through the simplex projection that repeatedly zeroes the most
/// negative one and spreads its weight over the rest.
ReconstructionResult project_to_physical(const ComplexMatrix &raw);

/// Projects `eigenvalues` (any order) onto {x >= 0, sum x = 1}.
std::vector<double> project_eigenvalues(std::vector<double> eigenvalues);

ReconstructionResult reconstruct(const DensityMatrix &rho_true, const ReadoutMatrix &r, const Sampling &sampling,
                                 const Conventions &conventions, const NoiseParams &noise,
                                 const TomographyOptions &options = {});

/// Both matrices in the dump format followed by the
/// "fidelity=<f> distance_moved=<d> shots=<n> seed=<s>" summary line.
std::string format_reconstruction(const ReconstructionResult &result, double fidelity, const Sampling &sampling);

}  // namespace tgrover

#endif
