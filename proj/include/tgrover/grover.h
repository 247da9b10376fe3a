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

#ifndef TGROVER_GROVER_H
#define TGROVER_GROVER_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgrover/gates.h"
#include "tgrover/noise.h"
#include "tgrover/qmat.h"
#include "tgrover/readout.h"
#include "tgrover/tomography.h"

namespace tgrover {

/// One of the four oracles, identified by the basis state |uv> it tags.
/// Z-rotation signs: (-,-) -> 00, (+,-) -> 01, (-,+) -> 10, (+,+) -> 11.
class OracleId {
   public:
    /// Tag index 2u + v.
    explicit OracleId(std::size_t tag);
    static OracleId from_tag(const std::string &uv);
    static OracleId from_signs(int sign_i, int sign_ii);
    static std::array<OracleId, 4> all();

    std::size_t tag() const {
        return tag_;
    }
    std::string tag_string() const;
    /// (s_I, s_II), each +1 or -1.
    std::array<int, 2> signs() const;

    friend bool operator==(const OracleId &, const OracleId &) = default;

   private:
    std::size_t tag_;
};

GateSequence prep_sequence(const Conventions &conventions, const GateTimings &timings = {});
/// iSWAP, then Z(s_I pi/2) on I and Z(s_II pi/2) on II.
GateSequence oracle_sequence(OracleId id, const Conventions &conventions, const GateTimings &timings = {});
/// iSWAP, then pi/2 rotations about the conventions' decode axis on both qubits.
GateSequence decode_sequence(const Conventions &conventions, const GateTimings &timings = {});

/// Uniform superposition with the tagged component's sign flipped.
PureState tagged_state(OracleId id);
/// rho_rs = exp(i pi (delta_rt + delta_st)) / 4.
DensityMatrix ideal_tagged_state(OracleId id);
PureState uniform_superposition();

struct GroverSetup {
    NoiseParams noise = NoiseParams::disabled();
    ReadoutMatrix readout = ReadoutMatrix::identity();
    Conventions conventions;
    GateTimings timings;
    /// Single-run shots; empty selects the exact outcome distribution.
    std::optional<std::uint64_t> shots = 10000;
    /// Shots per tomography setting; empty selects the exact path.
    std::optional<std::uint64_t> tomography_shots = 10000;
    std::uint64_t seed = 1;
    bool with_tomography = false;
    bool ideal_prerotations = false;
    /// Decoherence-only wait between the decode step and the single-run readout.
    double pre_readout_idle_ns = 0.0;
    unsigned threads = 1;
};

struct AlgorithmResult {
    OracleId oracle{0};
    /// Empty on the exact path.
    std::optional<std::uint64_t> shots;
    OutcomeCounts outcome_counts{};
    /// Exact single-run outcome distribution (raw, uncorrected readout).
    Distribution outcome_probabilities{};
    /// count(tag)/shots, or the exact probability on the exact path.
    double success_probability = 0.0;
    double exact_success_probability = 0.0;
    /// <tag| rho_final |tag> of the simulated state before readout.
    double final_tag_population = 0.0;

    std::optional<ReconstructionResult> after_oracle;
    std::optional<ReconstructionResult> final_state;
    std::optional<double> f_int;
    std::optional<double> f_final;
};

/// Noiseless-or-noisy register states at the checkpoints of one run.
struct GroverTrajectory {
    DensityMatrix after_prep;
    DensityMatrix after_oracle;
    DensityMatrix after_decode;
};

GroverTrajectory simulate_trajectory(OracleId id, const NoiseParams &noise, const Conventions &conventions,
                                     const GateTimings &timings);

/// Seeds: single runs use derive_seed(seed, {1, tag}); tomography after the oracle
/// {2, tag, 0}, after decoding {2, tag, 1}.
AlgorithmResult run_algorithm(OracleId id, const GroverSetup &setup);
/// All four oracles in tag order; parallel over oracles when setup.threads > 1.
std::array<AlgorithmResult, 4> run_all_oracles(const GroverSetup &setup);

/// p_{ab/|uv>}: row = outcome ab, column = oracle tag uv.
class ConditionalTable {
   public:
    using Entries = std::array<std::array<double, 4>, 4>;

    /// Throws std::invalid_argument unless every column sums to 1 within 1e-9.
    explicit ConditionalTable(const Entries &entries);
    static ConditionalTable identity();

    double operator()(std::size_t outcome, std::size_t tag) const {
        return p_[outcome][tag];
    }
    const Entries &entries() const {
        return p_;
    }

   private:
    Entries p_;
};

ConditionalTable conditional_table(const GroverSetup &setup);
ConditionalTable table_from_results(const std::array<AlgorithmResult, 4> &results);

/// Header row "ab/uv,|00>,|01>,|10>,|11>", then one row per outcome.
ConditionalTable parse_conditional_table_csv(std::istream &in);
std::string format_conditional_table_csv(const ConditionalTable &table);

struct OutcomeFidelity {
    std::array<double, 4> per_outcome{};
    double average = 0.0;
};

/// f_ab = p_{ab/|ab>} / sum_uv p_{ab/|uv>}. Throws DegenerateTableError on a zero row.
OutcomeFidelity outcome_fidelity(const ConditionalTable &table);

/// Convention points for which every oracle tags its own state after the oracle step and
/// the noiseless, error-free algorithm returns the tag with certainty.
std::vector<Conventions> deterministic_conventions();
bool conventions_are_deterministic(const Conventions &conventions);

}  // namespace tgrover

#endif
