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

#include "tgrover/readout.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <vector>

#include "tgrover/errors.h"
#include "tgrover/rng.h"
#include "tgrover/tolerances.h"

namespace tgrover {

namespace {

void require_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw_invalid_argument(std::string("readout rate ") + name + " must lie in [0, 1]");
    }
}

void require_normalized(const Distribution &q) {
    double sum = 0.0;
    for (double p : q) {
        if (!(p >= -tol::kDistribution)) {
            throw_invalid_argument("distribution has a negative entry");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::kDistribution) {
        throw_invalid_argument("distribution does not sum to 1");
    }
}

// 2x2 confusion column for one qubit: P(report bit | projected state).
double report_probability(const QubitReadoutErrors &e, int state, int bit) {
    if (state == 0) {
        return bit == 0 ? 1.0 - e.e0 : e.e0;
    }
    return bit == 0 ? e.e1 : 1.0 - e.e1;
}

}  // namespace

ReadoutErrorRates ReadoutErrorRates::ideal() {
    return {};
}

ReadoutErrorRates ReadoutErrorRates::device(bool shelving, double crosstalk) {
    ReadoutErrorRates r;
    if (shelving) {
        r.e0_i = 0.05;
        r.e1_i = 0.11;
        r.e0_ii = 0.05;
        r.e1_ii = 0.12;
    } else {
        r.e0_i = 0.10;
        r.e1_i = 0.16;
        r.e0_ii = 0.12;
        r.e1_ii = 0.15;
    }
    r.shelving = shelving;
    r.crosstalk = crosstalk;
    return r;
}

void ReadoutErrorRates::validate() const {
    require_probability(e0_i, "e0_i");
    require_probability(e1_i, "e1_i");
    require_probability(e0_ii, "e0_ii");
    require_probability(e1_ii, "e1_ii");
    if (!(crosstalk >= 0.0 && crosstalk <= 0.1)) {
        throw_invalid_argument("crosstalk must lie in [0, 0.1]");
    }
    if (!(e0_i + e1_i < 1.0) || !(e0_ii + e1_ii < 1.0)) {
        throw_invalid_argument("readout contrast must be positive (e0 + e1 < 1)");
    }
}

ReadoutMatrix::ReadoutMatrix(const Entries &entries) : p_(entries) {
    for (std::size_t s = 0; s < 4; ++s) {
        double sum = 0.0;
        for (std::size_t o = 0; o < 4; ++o) {
            if (!(p_[o][s] >= 0.0 && p_[o][s] <= 1.0)) {
                throw_invalid_argument("readout matrix entries must lie in [0, 1]");
            }
            sum += p_[o][s];
        }
        if (std::abs(sum - 1.0) > tol::kStochastic) {
            throw_invalid_argument("readout matrix column " + std::to_string(s) + " does not sum to 1");
        }
    }
}

ReadoutMatrix ReadoutMatrix::identity() {
    Entries e{};
    for (std::size_t k = 0; k < 4; ++k) {
        e[k][k] = 1.0;
    }
    return ReadoutMatrix(e);
}

Distribution ReadoutMatrix::column(std::size_t state) const {
    return {p_[0][state], p_[1][state], p_[2][state], p_[3][state]};
}

bool ReadoutMatrix::is_identity() const {
    for (std::size_t o = 0; o < 4; ++o) {
        for (std::size_t s = 0; s < 4; ++s) {
            if (p_[o][s] != (o == s ? 1.0 : 0.0)) {
                return false;
            }
        }
    }
    return true;
}

ReadoutMatrix build_readout_matrix(const ReadoutErrorRates &rates) {
    rates.validate();
    const QubitReadoutErrors err_i = rates.qubit(Qubit::I);
    const QubitReadoutErrors err_ii = rates.qubit(Qubit::II);
    const double chi = rates.crosstalk;

    ReadoutMatrix::Entries e{};
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            const std::size_t state = 2 * u + v;
            // Crosstalk flips the reported bit of one qubit when its partner sits in |1>.
            const double flip_a = chi * v;
            const double flip_b = chi * u;
            for (int a = 0; a < 2; ++a) {
                const double pa = (1.0 - flip_a) * report_probability(err_i, u, a) +
                                  flip_a * report_probability(err_i, u, 1 - a);
                for (int b = 0; b < 2; ++b) {
                    const double pb = (1.0 - flip_b) * report_probability(err_ii, v, b) +
                                      flip_b * report_probability(err_ii, v, 1 - b);
                    e[2 * a + b][state] = pa * pb;
                }
            }
        }
    }
    return ReadoutMatrix(e);
}

Distribution outcome_distribution(const DensityMatrix &rho, const ReadoutMatrix &r) {
    Distribution p = rho.populations();
    double total = 0.0;
    for (double &x : p) {
        if (x < 0.0) {
            if (x < -tol::kPositivity) {
                throw ConsistencyError("density matrix population is negative");
            }
            x = 0.0;
        }
        total += x;
    }
    for (double &x : p) {
        x /= total;
    }
    Distribution q{};
    for (std::size_t o = 0; o < 4; ++o) {
        for (std::size_t s = 0; s < 4; ++s) {
            q[o] += r(o, s) * p[s];
        }
    }
    return q;
}

OutcomeCounts sample_shot_range(const Distribution &q, std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
    require_normalized(q);
    std::array<double, 3> cdf{};
    double acc = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        acc += std::max(0.0, q[k]);
        cdf[k] = acc;
    }
    OutcomeCounts counts{};
    for (std::uint64_t shot = begin; shot < end; ++shot) {
        // Measured against the running sum of q, so outcome 3 absorbs any rounding slack.
        const double u = uniform_at(seed, shot) * (acc + std::max(0.0, q[3]));
        std::size_t outcome = 3;
        for (std::size_t k = 0; k < 3; ++k) {
            if (u < cdf[k]) {
                outcome = k;
                break;
            }
        }
        ++counts[outcome];
    }
    return counts;
}

OutcomeCounts sample_shots(const Distribution &q, std::uint64_t n, std::uint64_t seed, unsigned threads) {
    if (n == 0) {
        throw_invalid_argument("sample_shots: need at least one shot");
    }
    require_normalized(q);
    threads = std::max(1u, threads);
    if (threads == 1 || n < 4096) {
        return sample_shot_range(q, seed, 0, n);
    }
    std::vector<std::future<OutcomeCounts>> parts;
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (std::uint64_t begin = 0; begin < n; begin += chunk) {
        const std::uint64_t end = std::min(n, begin + chunk);
        parts.push_back(std::async(std::launch::async, sample_shot_range, q, seed, begin, end));
    }
    OutcomeCounts total{};
    for (auto &part : parts) {
        const OutcomeCounts c = part.get();
        for (std::size_t k = 0; k < 4; ++k) {
            total[k] += c[k];
        }
    }
    return total;
}

Distribution frequencies(const OutcomeCounts &counts) {
    std::uint64_t n = 0;
    for (auto c : counts) {
        n += c;
    }
    if (n == 0) {
        throw_invalid_argument("frequencies: no shots");
    }
    Distribution f{};
    for (std::size_t k = 0; k < 4; ++k) {
        f[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
    }
    return f;
}

Distribution correct_distribution(const Distribution &q_hat, const ReadoutMatrix &r) {
    double sum = 0.0;
    for (double x : q_hat) {
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol::kDistribution) {
        throw_invalid_argument("correct_distribution: input does not sum to 1");
    }
    // Gaussian elimination with partial pivoting on [R | q_hat].
    std::array<std::array<double, 5>, 4> aug{};
    for (std::size_t row = 0; row < 4; ++row) {
        for (std::size_t col = 0; col < 4; ++col) {
            aug[row][col] = r(row, col);
        }
        aug[row][4] = q_hat[row];
    }
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < 4; ++row) {
            if (std::abs(aug[row][col]) > std::abs(aug[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(aug[pivot][col]) < tol::kSingularPivot) {
            throw SingularMatrixError("readout matrix is numerically singular");
        }
        std::swap(aug[col], aug[pivot]);
        for (std::size_t row = 0; row < 4; ++row) {
            if (row == col) {
                continue;
            }
            const double f = aug[row][col] / aug[col][col];
            for (std::size_t k = col; k < 5; ++k) {
                aug[row][k] -= f * aug[col][k];
            }
        }
    }
    Distribution p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = aug[k][4] / aug[k][k];
    }
    return p;
}

std::string format_readout_csv(const ReadoutMatrix &r) {
    static constexpr const char *kLabels[] = {"00", "01", "10", "11"};
    std::string out = "ab/uv,|00>,|01>,|10>,|11>\n";
    char buf[64];
    for (std::size_t o = 0; o < 4; ++o) {
        out += kLabels[o];
        for (std::size_t s = 0; s < 4; ++s) {
            std::snprintf(buf, sizeof(buf), ",%.6g", r(o, s));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace tgrover
