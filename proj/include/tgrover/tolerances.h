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

#ifndef TGROVER_TOLERANCES_H
#define TGROVER_TOLERANCES_H

// Numerical tolerances shared by every module and by the tests.
namespace tgrover::tol {

inline constexpr double kNorm = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kImaginary = 1e-10;
inline constexpr double kKrausCompleteness = 1e-12;
inline constexpr double kStochastic = 1e-12;
inline constexpr double kDistribution = 1e-10;
inline constexpr double kEigen = 1e-10;
inline constexpr double kProjectionInput = 1e-8;
/// Smallest pivot accepted when inverting a readout matrix.
inline constexpr double kSingularPivot = 1e-12;

}  // namespace tgrover::tol

#endif
