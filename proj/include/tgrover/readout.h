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

#ifndef TGROVER_READOUT_H
#define TGROVER_READOUT_H

#include <array>
#include <cstdint>
#include <string>

#include "tgrover/qmat.h"

namespace tgrover {

/// Probabilities over the two-bit outcomes 00, 01, 10, 11 (bit a of qubit I first).
using Distribution = std::array<double, 4>;
using OutcomeCounts = std::array<std::uint64_t, 4>;

/// Misassignment rates for one qubit: e0 = P(report 1 | |0>), e1 = P(report 0 | |1>).
struct QubitReadoutErrors {
    double e0 = 0.0;
    double e1 = 0.0;

    double contrast() const {
        return 1.0 - e0 - e1;
    }
};

struct ReadoutErrorRates {
    // With shelving on, the e1 slots carry the |2> misassignment rates.
    double e0_i = 0.0;
    double e1_i = 0.0;
    double e0_ii = 0.0;
    double e1_ii = 0.0;
    bool shelving = false;
    /// Probability that a qubit's reported bit flips when the partner was projected onto |1>.
    double crosstalk = 0.0;

    static ReadoutErrorRates ideal();
    /// Device rates at the simultaneous-readout working point, with or without shelving.
    static ReadoutErrorRates device(bool shelving, double crosstalk);

    QubitReadoutErrors qubit(Qubit q) const {
        return q == Qubit::I ? QubitReadoutErrors{e0_i, e1_i} : QubitReadoutErrors{e0_ii, e1_ii};
    }
    void validate() const;
};

/// Column-stochastic map from projected register state |uv> (column) to outcome ab (row).
class ReadoutMatrix {
   public:
    using Entries = std::array<std::array<double, 4>, 4>;

    explicit ReadoutMatrix(const Entries &entries);
    static ReadoutMatrix identity();

    double operator()(std::size_t outcome, std::size_t state) const {
        return p_[outcome][state];
    }
    const Entries &entries() const {
        return p_;
    }
    Distribution column(std::size_t state) const;
    bool is_identity() const;

   private:
    Entries p_;
};

ReadoutMatrix build_readout_matrix(const ReadoutErrorRates &rates);

/// R applied to the computational-basis populations of rho.
Distribution outcome_distribution(const DensityMatrix &rho, const ReadoutMatrix &r);

/// n categorical draws from q. Shot k uses uniform_at(seed, k), so the counts do not
/// depend on `threads`.
OutcomeCounts sample_shots(const Distribution &q, std::uint64_t n, std::uint64_t seed, unsigned threads = 1);
/// Draws for shots [begin, end) only.
OutcomeCounts sample_shot_range(const Distribution &q, std::uint64_t seed, std::uint64_t begin, std::uint64_t end);

Distribution frequencies(const OutcomeCounts &counts);

/// R^{-1} q_hat. No clipping: entries may leave [0, 1] under sampling noise.
/// Throws SingularMatrixError when R is numerically singular.
Distribution correct_distribution(const Distribution &q_hat, const ReadoutMatrix &r);

/// Rows = outcomes 00..11, columns = input states |00>..|11>.
std::string format_readout_csv(const ReadoutMatrix &r);

}  // namespace tgrover

#endif
