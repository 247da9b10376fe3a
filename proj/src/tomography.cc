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

#include "tgrover/tomography.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numeric>
#include <sstream>
#include <vector>

#include "tgrover/errors.h"
#include "tgrover/rng.h"
#include "tgrover/tolerances.h"

namespace tgrover {

namespace {

// Angle in {+pi/2, -pi/2} for which R_axis(angle)^dagger Z R_axis(angle) = measured.
double basis_change_angle(Axis axis, Pauli measured, const Conventions &conventions) {
    const ComplexMatrix z = pauli_matrix(Pauli::Z);
    const ComplexMatrix target = pauli_matrix(measured);
    for (double angle : {M_PI / 2, -M_PI / 2}) {
        const ComplexMatrix u = rotation_unitary(axis, angle, conventions);
        if ((u.adjoint() * z * u).max_abs_diff(target) < 1e-12) {
            return angle;
        }
    }
    throw ConsistencyError("no quarter-turn maps Z onto the measured Pauli");
}

struct Prerotation {
    Axis axis;
    double angle;
};

std::optional<Prerotation> qubit_prerotation(Pauli p, const Conventions &conventions) {
    if (p == Pauli::X) {
        return Prerotation{Axis::Y, basis_change_angle(Axis::Y, Pauli::X, conventions)};
    }
    if (p == Pauli::Y) {
        return Prerotation{Axis::X, basis_change_angle(Axis::X, Pauli::Y, conventions)};
    }
    return std::nullopt;
}

double estimate_setting(const DensityMatrix &rho, PauliLabel label, const ReadoutMatrix &r, const Sampling &sampling,
                        std::uint64_t setting_seed, const Conventions &conventions, const NoiseParams &noise,
                        const TomographyOptions &options) {
    const GateSequence pre = prerotation_sequence(label, conventions, options.timings);
    const NoiseParams pre_noise = options.ideal_prerotations ? NoiseParams::disabled() : noise;
    const DensityMatrix rotated = evolve_sequence(rho, pre, pre_noise, conventions);
    const Distribution q = outcome_distribution(rotated, r);
    const Distribution observed =
        sampling.is_exact() ? q : frequencies(sample_shots(q, *sampling.shots, setting_seed));
    return parity_expectation(correct_distribution(observed, r), label);
}

}  // namespace

GateSequence prerotation_sequence(PauliLabel label, const Conventions &conventions, const GateTimings &timings) {
    const auto first = qubit_prerotation(label.first, conventions);
    const auto second = qubit_prerotation(label.second, conventions);
    GateSequence seq;
    if (first && second) {
        append_rotation_layer(seq, first->axis, first->angle, second->axis, second->angle, timings);
    } else if (first) {
        seq.push_back(Gate::rotation(first->axis, Qubit::I, first->angle, timings.rotation_ns(first->axis)));
    } else if (second) {
        seq.push_back(Gate::rotation(second->axis, Qubit::II, second->angle, timings.rotation_ns(second->axis)));
    }
    return seq;
}

double parity_expectation(const Distribution &p, PauliLabel label) {
    double value = 0.0;
    for (std::size_t outcome = 0; outcome < 4; ++outcome) {
        const int a = static_cast<int>(outcome >> 1);
        const int b = static_cast<int>(outcome & 1);
        int sign = 1;
        if (label.first != Pauli::I && a == 1) {
            sign = -sign;
        }
        if (label.second != Pauli::I && b == 1) {
            sign = -sign;
        }
        value += sign * p[outcome];
    }
    return value;
}

PauliEstimates simulate_pauli_estimates(const DensityMatrix &rho, const ReadoutMatrix &r, const Sampling &sampling,
                                        const Conventions &conventions, const NoiseParams &noise,
                                        const TomographyOptions &options) {
    if (sampling.shots && *sampling.shots == 0) {
        throw_invalid_argument("tomography needs at least one shot per setting");
    }
    const auto &labels = extended_pauli_set();
    std::array<double, 15> values{};

    auto run = [&](std::size_t k) {
        values[k] = estimate_setting(rho, labels[k], r, sampling, derive_seed(sampling.seed, k), conventions, noise,
                                     options);
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        for (std::size_t k = 0; k < labels.size(); ++k) {
            run(k);
        }
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned t = 0; t < threads; ++t) {
            jobs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t k = t; k < labels.size(); k += threads) {
                    run(k);
                }
            }));
        }
        for (auto &j : jobs) {
            j.get();
        }
    }

    PauliEstimates est;
    est.shots_per_setting = sampling.shots;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        est.values[labels[k]] = values[k];
    }
    return est;
}

ComplexMatrix linear_inversion(const PauliEstimates &est) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (const PauliLabel &label : extended_pauli_set()) {
        const auto it = est.values.find(label);
        if (it == est.values.end()) {
            throw_invalid_argument("linear_inversion: missing estimate for " + label.str());
        }
        if (std::abs(it->second) > 1.0 + PauliEstimates::kSlack) {
            throw_invalid_argument("linear_inversion: estimate for " + label.str() + " is out of range");
        }
        m += pauli_operator(label) * Complex{it->second};
    }
    if (est.values.size() != extended_pauli_set().size()) {
        throw_invalid_argument("linear_inversion: unexpected labels in the estimate set");
    }
    return m * Complex{0.25};
}

std::vector<double> project_eigenvalues(std::vector<double> eigenvalues) {
    const std::size_t n = eigenvalues.size();
    if (n == 0) {
        return eigenvalues;
    }
    // Restore the unit trace first; a uniform shift is the closest such move.
    const double sum = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
    for (double &x : eigenvalues) {
        x += (1.0 - sum) / static_cast<double>(n);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

    // Walk up from the most negative eigenvalue. `pending` is the weight already removed,
    // to be spread uniformly over the `remaining` largest ones.
    double pending = 0.0;
    std::size_t remaining = n;
    while (remaining > 0) {
        const double candidate = eigenvalues[order[remaining - 1]];
        if (candidate + pending / static_cast<double>(remaining) >= 0.0) {
            break;
        }
        pending += candidate;
        eigenvalues[order[remaining - 1]] = 0.0;
        --remaining;
    }
    for (std::size_t k = 0; k < remaining; ++k) {
        eigenvalues[order[k]] += pending / static_cast<double>(remaining);
    }
    return eigenvalues;
}

ReconstructionResult project_to_physical(const ComplexMatrix &raw) {
    if (raw.dim() != 4) {
        throw_invalid_argument("project_to_physical: expects a 4x4 matrix");
    }
    if (!raw.is_hermitian(tol::kProjectionInput)) {
        throw_invalid_argument("project_to_physical: input is not Hermitian");
    }
    if (std::abs(raw.trace() - Complex{1.0}) > tol::kProjectionInput) {
        throw_invalid_argument("project_to_physical: input trace is not 1");
    }
    const ComplexMatrix hermitian = (raw + raw.adjoint()) * Complex{0.5};
    const EigenDecomposition eig = hermitian_eigen(hermitian);
    if (eig.values.front() >= 0.0 && std::abs(hermitian.trace().real() - 1.0) <= tol::kTrace) {
        DensityMatrix physical = DensityMatrix::trusted(hermitian);
        return {raw, physical, (raw - physical.matrix()).frobenius_norm()};
    }
    const std::vector<double> projected = project_eigenvalues(eig.values);
    DensityMatrix physical(from_eigen(eig.vectors, projected));
    return {raw, physical, (raw - physical.matrix()).frobenius_norm()};
}

ReconstructionResult reconstruct(const DensityMatrix &rho_true, const ReadoutMatrix &r, const Sampling &sampling,
                                 const Conventions &conventions, const NoiseParams &noise,
                                 const TomographyOptions &options) {
    const PauliEstimates est = simulate_pauli_estimates(rho_true, r, sampling, conventions, noise, options);
    return project_to_physical(linear_inversion(est));
}

std::string format_reconstruction(const ReconstructionResult &result, double fidelity, const Sampling &sampling) {
    std::ostringstream out;
    out << "# raw\n";
    write_matrix_text(out, result.raw);
    out << "# physical\n";
    write_matrix_text(out, result.physical.matrix());
    char buf[160];
    const std::string shots = sampling.is_exact() ? "exact" : std::to_string(*sampling.shots);
    std::snprintf(buf, sizeof(buf), "fidelity=%.6g distance_moved=%.6g shots=%s seed=%llu\n", fidelity,
                  result.distance_moved + 0.0, shots.c_str(), static_cast<unsigned long long>(sampling.seed));
    out << buf;
    return out.str();
}

}  // namespace tgrover
