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

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "test_util.h"
#include "tgrover/calibration.h"
#include "tgrover/errors.h"
#include "tgrover/grover.h"

using namespace tgrover;
using namespace tgrover::testing;

namespace {

constexpr double kPi = std::numbers::pi;

/// |phi> with the sign of component `tag` flipped, built directly.
PureState tagged_oracle(std::size_t tag) {
    std::vector<Complex> amps(4, 0.5);
    amps[tag] = -0.5;
    return PureState(amps);
}

DensityMatrix run_noiseless(const GateSequence &seq, const DensityMatrix &rho) {
    return apply_unitary(rho, sequence_unitary(seq, canonical_conventions()));
}

ConditionalTable load_table1() {
    std::ifstream in(std::string(TGROVER_DATA_DIR) + "/table1.csv");
    return parse_conditional_table_csv(in);
}

GroverSetup exact_setup(const NoiseParams &noise, double chi) {
    GroverSetup setup;
    setup.noise = noise;
    setup.readout = build_readout_matrix(ReadoutErrorRates::device(true, chi));
    setup.shots.reset();
    return setup;
}

}  // namespace

TEST(grover, oracle_sign_mapping) {
    EXPECT_EQ(OracleId::from_signs(-1, -1).tag_string(), "00");
    EXPECT_EQ(OracleId::from_signs(+1, -1).tag_string(), "01");
    EXPECT_EQ(OracleId::from_signs(-1, +1).tag_string(), "10");
    EXPECT_EQ(OracleId::from_signs(+1, +1).tag_string(), "11");
    for (const OracleId id : OracleId::all()) {
        EXPECT_EQ(OracleId::from_tag(id.tag_string()), id);
        const auto s = id.signs();
        EXPECT_EQ(OracleId::from_signs(s[0], s[1]), id);
    }
    EXPECT_THROW(OracleId::from_tag("02"), std::invalid_argument);
    EXPECT_THROW(OracleId(4), std::invalid_argument);
    EXPECT_THROW(OracleId::from_signs(0, 1), std::invalid_argument);
}

TEST(grover, oracle_sequence_structure) {
    const GateSequence seq = oracle_sequence(OracleId::from_tag("01"), canonical_conventions());
    ASSERT_EQ(seq.size(), 3u);
    EXPECT_EQ(seq.gates()[0].kind, GateKind::ISWAP);
    EXPECT_EQ(seq.gates()[1].kind, GateKind::RZ);
    EXPECT_EQ(seq.gates()[1].target, GateTarget::I);
    EXPECT_DOUBLE_EQ(seq.gates()[1].angle, kPi / 2);
    EXPECT_EQ(seq.gates()[2].target, GateTarget::II);
    EXPECT_DOUBLE_EQ(seq.gates()[2].angle, -kPi / 2);
}

TEST(grover, prep_gives_uniform_superposition) {
    const DensityMatrix rho = run_noiseless(prep_sequence(canonical_conventions()), DensityMatrix::basis(0));
    for (double p : rho.populations()) {
        EXPECT_NEAR(p, 0.25, 1e-15);
    }
    EXPECT_NEAR(state_fidelity(rho, PureState::normalized({1.0, 1.0, 1.0, 1.0})), 1.0, 1e-12);

    // A second preparation completes a pi rotation on each qubit: |11>.
    GateSequence twice = prep_sequence(canonical_conventions());
    twice.append(prep_sequence(canonical_conventions()));
    EXPECT_NEAR(run_noiseless(twice, DensityMatrix::basis(0)).populations()[3], 1.0, 1e-12);
}

TEST(grover, oracle_produces_tagged_states) {
    const DensityMatrix phi = DensityMatrix::from_pure(uniform_superposition());
    for (const OracleId id : OracleId::all()) {
        const DensityMatrix out = run_noiseless(oracle_sequence(id, canonical_conventions()), phi);
        EXPECT_NEAR(state_fidelity(out, tagged_oracle(id.tag())), 1.0, 1e-12) << id.tag_string();
        EXPECT_LT(trace_distance(out, ideal_tagged_state(id)), 1e-10);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t s = 0; s < 4; ++s) {
                EXPECT_NEAR(std::abs(out(r, s)), 0.25, 1e-10);
                const double sign = ((r == id.tag()) != (s == id.tag())) ? -1.0 : 1.0;
                EXPECT_NEAR(std::abs(out(r, s) - 0.25 * sign), 0.0, 1e-9);
            }
        }
    }
}

TEST(grover, ideal_tagged_state_entries) {
    const DensityMatrix t00 = ideal_tagged_state(OracleId::from_tag("00"));
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(t00(k, k).real(), 0.25, 1e-15);
    }
    EXPECT_NEAR(t00(0, 1).real(), -0.25, 1e-15);
    EXPECT_NEAR(t00(1, 2).real(), 0.25, 1e-15);
    for (const OracleId id : OracleId::all()) {
        EXPECT_NEAR(state_fidelity(ideal_tagged_state(id), tagged_state(id)), 1.0, 1e-12);
        EXPECT_NEAR(state_fidelity(ideal_tagged_state(id), tagged_oracle(id.tag())), 1.0, 1e-12);
    }
}

TEST(grover, tagged_states_are_orthonormal) {
    for (const OracleId a : OracleId::all()) {
        for (const OracleId b : OracleId::all()) {
            EXPECT_NEAR(std::abs(tagged_state(a).inner(tagged_state(b))), a == b ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(grover, decode_examples) {
    const GateSequence decode = decode_sequence(canonical_conventions());
    ASSERT_EQ(decode.size(), 3u);
    EXPECT_EQ(decode.gates()[0].kind, GateKind::ISWAP);
    EXPECT_EQ(decode.gates()[1].kind, GateKind::RX);
    for (const OracleId id : OracleId::all()) {
        const DensityMatrix out = run_noiseless(decode, DensityMatrix::from_pure(tagged_oracle(id.tag())));
        EXPECT_NEAR(out.populations()[id.tag()], 1.0, 1e-12) << id.tag_string();
    }
    const DensityMatrix spread = run_noiseless(decode, DensityMatrix::from_pure(uniform_superposition()));
    for (double p : spread.populations()) {
        EXPECT_LT(p, 0.9);
    }
}

TEST(grover, convention_search_finds_canonical_point) {
    // Independent search: both the sign table and determinism, evaluated with raw matrices.
    std::vector<Conventions> passing;
    for (const Conventions &conv : all_conventions()) {
        bool ok = true;
        for (const OracleId id : OracleId::all()) {
            const DensityMatrix phi = apply_unitary(DensityMatrix::basis(0), sequence_unitary(prep_sequence(conv), conv));
            const DensityMatrix tagged = apply_unitary(phi, sequence_unitary(oracle_sequence(id, conv), conv));
            const DensityMatrix out = apply_unitary(tagged, sequence_unitary(decode_sequence(conv), conv));
            ok = ok && state_fidelity(tagged, tagged_oracle(id.tag())) > 1 - 1e-10 &&
                 out.populations()[id.tag()] > 1 - 1e-10;
        }
        if (ok) {
            passing.push_back(conv);
        }
    }
    ASSERT_EQ(passing.size(), 1u);
    EXPECT_EQ(passing[0], canonical_conventions());
    EXPECT_TRUE(conventions_are_deterministic(canonical_conventions()));

    // Flipping any single element breaks at least one oracle end to end.
    Conventions flipped_sign = canonical_conventions();
    flipped_sign.rotation_sign = -1;
    Conventions flipped_phase = canonical_conventions();
    flipped_phase.iswap_phase = IswapPhase::kPlusI;
    Conventions flipped_axis = canonical_conventions();
    flipped_axis.decode_axis = Axis::Y;
    for (const Conventions &conv : {flipped_sign, flipped_phase, flipped_axis}) {
        GroverSetup setup;
        setup.conventions = conv;
        setup.shots.reset();
        bool all_certain = true;
        for (const OracleId id : OracleId::all()) {
            const GroverTrajectory t = simulate_trajectory(id, NoiseParams::disabled(), conv, setup.timings);
            const bool tag_ok = state_fidelity(t.after_oracle, tagged_oracle(id.tag())) > 1 - 1e-10;
            all_certain = all_certain && tag_ok && run_algorithm(id, setup).success_probability > 1 - 1e-10;
        }
        EXPECT_FALSE(all_certain) << conv.str();
    }
}

TEST(grover, noiseless_algorithm_is_certain) {
    for (std::uint64_t shots : {1u, 100u, 10000u}) {
        GroverSetup setup;
        setup.shots = shots;
        for (const OracleId id : OracleId::all()) {
            const AlgorithmResult r = run_algorithm(id, setup);
            EXPECT_EQ(r.success_probability, 1.0);
            EXPECT_EQ(r.outcome_counts[id.tag()], shots);
        }
    }
    GroverSetup exact;
    exact.shots.reset();
    for (const OracleId id : OracleId::all()) {
        EXPECT_NEAR(run_algorithm(id, exact).success_probability, 1.0, 1e-10);
    }
}

TEST(grover, device_readout_limits_success) {
    const GroverSetup setup = exact_setup(NoiseParams::disabled(), 0.0);
    EXPECT_NEAR(run_algorithm(OracleId::from_tag("00"), setup).success_probability, 0.95 * 0.95, 1e-12);
    // |11>: (1 - e1_I)(1 - e1_II).
    EXPECT_NEAR(run_algorithm(OracleId::from_tag("11"), setup).success_probability, 0.89 * 0.88, 1e-12);
}

TEST(grover, success_monotone_in_crosstalk) {
    const NoiseParams noise;
    for (const OracleId id : OracleId::all()) {
        double previous = 2.0;
        for (double chi : {0.0, 0.01, 0.02, 0.05}) {
            const double p = run_algorithm(id, exact_setup(noise, chi)).success_probability;
            EXPECT_LE(p, previous + 1e-15) << id.tag_string() << " chi=" << chi;
            previous = p;
        }
    }
}

TEST(grover, decoherence_lowers_success) {
    const NoiseParams noise;
    for (const OracleId id : OracleId::all()) {
        const AlgorithmResult noisy = run_algorithm(id, exact_setup(noise, 0.0));
        const AlgorithmResult clean = run_algorithm(id, exact_setup(NoiseParams::disabled(), 0.0));
        EXPECT_LT(noisy.success_probability, clean.success_probability);
        EXPECT_LT(noisy.final_tag_population, 1.0);
        EXPECT_GT(noisy.final_tag_population, noisy.success_probability);
    }
}

TEST(grover, algorithm_with_tomography) {
    GroverSetup setup;
    setup.shots.reset();
    setup.tomography_shots.reset();
    setup.with_tomography = true;
    for (const OracleId id : OracleId::all()) {
        const AlgorithmResult r = run_algorithm(id, setup);
        ASSERT_TRUE(r.f_int.has_value());
        EXPECT_NEAR(*r.f_int, 1.0, 1e-9);
        EXPECT_NEAR(*r.f_final, 1.0, 1e-9);
    }
    setup.noise = NoiseParams{};
    for (const OracleId id : OracleId::all()) {
        const AlgorithmResult r = run_algorithm(id, setup);
        EXPECT_LT(*r.f_int, 1.0);
        EXPECT_NEAR(*r.f_final, r.final_tag_population, 0.05);
    }
}

TEST(grover, runs_are_deterministic_across_threads) {
    GroverSetup setup;
    setup.noise = NoiseParams{};
    setup.readout = build_readout_matrix(ReadoutErrorRates::device(true, 0.01));
    setup.seed = 42;
    setup.with_tomography = true;
    setup.tomography_shots = 2000;
    const auto serial = run_all_oracles(setup);
    setup.threads = 4;
    const auto parallel = run_all_oracles(setup);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(serial[k].outcome_counts, parallel[k].outcome_counts);
        EXPECT_EQ(*serial[k].f_int, *parallel[k].f_int);
        EXPECT_EQ(*serial[k].f_final, *parallel[k].f_final);
    }
    setup.seed = 43;
    EXPECT_NE(run_all_oracles(setup)[0].outcome_counts, serial[0].outcome_counts);
}

TEST(grover, conditional_table_examples) {
    GroverSetup setup;
    const ConditionalTable ideal = conditional_table(setup);
    for (std::size_t o = 0; o < 4; ++o) {
        for (std::size_t t = 0; t < 4; ++t) {
            EXPECT_EQ(ideal(o, t), o == t ? 1.0 : 0.0);
        }
    }
    setup.noise = NoiseParams{};
    setup.readout = build_readout_matrix(ReadoutErrorRates::device(true, 0.01));
    for (const bool exact : {true, false}) {
        GroverSetup s = setup;
        if (exact) {
            s.shots.reset();
        }
        const ConditionalTable table = conditional_table(s);
        for (std::size_t t = 0; t < 4; ++t) {
            double sum = 0.0;
            for (std::size_t o = 0; o < 4; ++o) {
                sum += table(o, t);
            }
            if (exact) {
                EXPECT_NEAR(sum, 1.0, 1e-9);
            } else {
                EXPECT_EQ(sum, 1.0);
            }
        }
    }
}

TEST(grover, table1_outcome_fidelities) {
    const ConditionalTable table = load_table1();
    EXPECT_DOUBLE_EQ(table(0, 0), 0.666);
    EXPECT_DOUBLE_EQ(table(1, 0), 0.127);
    EXPECT_DOUBLE_EQ(table(2, 0), 0.128);
    EXPECT_DOUBLE_EQ(table(3, 0), 0.079);

    const OutcomeFidelity f = outcome_fidelity(table);
    const std::array<double, 4> printed = {0.570, 0.634, 0.565, 0.594};
    for (std::size_t k = 0; k < 4; ++k) {
        // Row-normalized diagonal, computed here directly.
        const double row = table(k, 0) + table(k, 1) + table(k, 2) + table(k, 3);
        EXPECT_NEAR(f.per_outcome[k], table(k, k) / row, 1e-15);
        EXPECT_NEAR(f.per_outcome[k], printed[k], 5e-4);
    }
    EXPECT_NEAR(f.average, 0.591, 5e-4);

    const OutcomeFidelity id = outcome_fidelity(ConditionalTable::identity());
    for (double v : id.per_outcome) {
        EXPECT_EQ(v, 1.0);
    }
}

TEST(grover, degenerate_and_malformed_tables) {
    ConditionalTable::Entries e{};
    for (std::size_t t = 0; t < 4; ++t) {
        e[0][t] = 0.5;
        e[1][t] = 0.5;
    }
    EXPECT_THROW(outcome_fidelity(ConditionalTable(e)), DegenerateTableError);
    e[0][0] = 0.6;
    EXPECT_THROW(ConditionalTable{e}, std::invalid_argument);

    std::istringstream short_csv("ab/uv,|00>,|01>,|10>,|11>\n00,1,0,0,0\n");
    EXPECT_THROW(parse_conditional_table_csv(short_csv), std::invalid_argument);

    std::istringstream round(format_conditional_table_csv(load_table1()));
    EXPECT_EQ(parse_conditional_table_csv(round).entries(), load_table1().entries());
}

TEST(grover, calibration_sweep) {
    CalibrationGrid grid;
    grid.crosstalk = {0.0, 0.02, 0.05};
    grid.pre_readout_idle_ns = {0.0, 100.0};
    const CalibrationResult r = calibrate(NoiseParams{}, ReadoutErrorRates::device(true, 0.0),
                                          canonical_conventions(), GateTimings{}, grid);
    ASSERT_EQ(r.sweep.size(), 6u);
    EXPECT_EQ(r.targets, kDeviceSuccessProbabilities);
    double best = 1e300;
    for (const CalibrationPoint &p : r.sweep) {
        best = std::min(best, p.squared_error);
    }
    EXPECT_EQ(r.best.squared_error, best);
    EXPECT_NEAR(r.rms_residual(), std::sqrt(best / 4), 1e-15);
    // Monotone in chi at each idle.
    for (std::size_t row = 0; row < 2; ++row) {
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_GE(r.sweep[3 * row].success[k], r.sweep[3 * row + 1].success[k]);
            EXPECT_GE(r.sweep[3 * row + 1].success[k], r.sweep[3 * row + 2].success[k]);
        }
    }
    // Longer idles lose population from every tag except the ground state.
    for (std::size_t k = 1; k < 4; ++k) {
        EXPECT_GT(r.sweep[0].success[k], r.sweep[3].success[k]);
    }
    // Unmodeled crosstalk: at chi = 0 every simulated P_S exceeds the device values.
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_GT(r.sweep[0].success[k], kDeviceSuccessProbabilities[k]);
    }
}
