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

#include "tgrover/calibration.h"

#include <cmath>

#include "tgrover/errors.h"
#include "tgrover/grover.h"

namespace tgrover {

CalibrationGrid CalibrationGrid::standard() {
    CalibrationGrid g;
    for (int k = 0; k <= 10; ++k) {
        g.crosstalk.push_back(0.005 * k);
    }
    for (int k = 0; k <= 30; ++k) {
        g.pre_readout_idle_ns.push_back(10.0 * k);
    }
    return g;
}

double CalibrationResult::rms_residual() const {
    return std::sqrt(best.squared_error / 4.0);
}

CalibrationResult calibrate(const NoiseParams &noise, const ReadoutErrorRates &rates, const Conventions &conventions,
                            const GateTimings &timings, const CalibrationGrid &grid,
                            const std::array<double, 4> &targets) {
    if (grid.crosstalk.empty() || grid.pre_readout_idle_ns.empty()) {
        throw_invalid_argument("calibration grid is empty");
    }
    const auto ids = OracleId::all();
    std::vector<DensityMatrix> decoded;
    for (OracleId id : ids) {
        decoded.push_back(simulate_trajectory(id, noise, conventions, timings).after_decode);
    }
    std::vector<ReadoutMatrix> matrices;
    for (double chi : grid.crosstalk) {
        ReadoutErrorRates r = rates;
        r.crosstalk = chi;
        matrices.push_back(build_readout_matrix(r));
    }

    CalibrationResult result;
    result.targets = targets;
    bool have_best = false;
    for (double idle : grid.pre_readout_idle_ns) {
        std::vector<DensityMatrix> at_readout;
        for (const DensityMatrix &rho : decoded) {
            at_readout.push_back(idle > 0.0 ? evolve_step(rho, Gate::idle(idle), noise, conventions) : rho);
        }
        for (std::size_t c = 0; c < matrices.size(); ++c) {
            CalibrationPoint point;
            point.crosstalk = grid.crosstalk[c];
            point.pre_readout_idle_ns = idle;
            for (std::size_t t = 0; t < 4; ++t) {
                point.success[t] = outcome_distribution(at_readout[t], matrices[c])[t];
                const double d = point.success[t] - targets[t];
                point.squared_error += d * d;
            }
            // Strict comparison keeps the first (smallest chi, shortest idle) of any tie.
            if (!have_best || point.squared_error < result.best.squared_error) {
                result.best = point;
                have_best = true;
            }
            result.sweep.push_back(point);
        }
    }
    return result;
}

}  // namespace tgrover
