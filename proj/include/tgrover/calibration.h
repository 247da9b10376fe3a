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

#ifndef TGROVER_CALIBRATION_H
#define TGROVER_CALIBRATION_H

#include <array>
#include <vector>

#include "tgrover/gates.h"
#include "tgrover/noise.h"
#include "tgrover/readout.h"

namespace tgrover {

/// Measured single-run success probabilities for tags 00, 01, 10, 11.
inline constexpr std::array<double, 4> kDeviceSuccessProbabilities = {0.67, 0.55, 0.62, 0.52};

struct CalibrationGrid {
    std::vector<double> crosstalk;
    std::vector<double> pre_readout_idle_ns;

    /// Crosstalk 0 to 0.05 in steps of 0.005; idle 0 to 300 ns in steps of 10 ns.
    static CalibrationGrid standard();
};

struct CalibrationPoint {
    double crosstalk = 0.0;
    double pre_readout_idle_ns = 0.0;
    std::array<double, 4> success{};
    /// Sum of squared deviations from the targets.
    double squared_error = 0.0;
};

struct CalibrationResult {
    CalibrationPoint best;
    std::array<double, 4> targets{};
    /// Row-major over (idle, crosstalk), crosstalk varying fastest.
    std::vector<CalibrationPoint> sweep;

    double rms_residual() const;
};

/// Exact-distribution sweep of crosstalk and pre-readout idle. `rates.crosstalk` is
/// ignored; every other field of `rates` is held fixed.
CalibrationResult calibrate(const NoiseParams &noise, const ReadoutErrorRates &rates, const Conventions &conventions,
                            const GateTimings &timings, const CalibrationGrid &grid = CalibrationGrid::standard(),
                            const std::array<double, 4> &targets = kDeviceSuccessProbabilities);

}  // namespace tgrover

#endif
