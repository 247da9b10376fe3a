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

#include "tgrover/grover.h"

#include <cmath>
#include <cstdio>
#include <future>
#include <istream>
#include <sstream>

#include "tgrover/errors.h"
#include "tgrover/rng.h"

namespace tgrover {

namespace {

constexpr std::uint64_t kSingleRunStream = 1;
constexpr std::uint64_t kTomographyStream = 2;

constexpr const char *kTagNames[] = {"00", "01", "10", "11"};

}  // namespace

OracleId::OracleId(std::size_t tag) : tag_(tag) {
    if (tag > 3) {
        throw_invalid_argument("oracle tag must be in 0..3");
    }
}

OracleId OracleId::from_tag(const std::string &uv) {
    for (std::size_t k = 0; k < 4; ++k) {
        if (uv == kTagNames[k]) {
            return OracleId(k);
        }
    }
    throw_invalid_argument("unknown oracle tag '" + uv + "'");
}

OracleId OracleId::from_signs(int sign_i, int sign_ii) {
    if ((sign_i != 1 && sign_i != -1) || (sign_ii != 1 && sign_ii != -1)) {
        throw_invalid_argument("oracle signs must be +1 or -1");
    }
    // The qubit I sign selects v and the qubit II sign selects u.
    const std::size_t u = sign_ii > 0 ? 1 : 0;
    const std::size_t v = sign_i > 0 ? 1 : 0;
    return OracleId(2 * u + v);
}

std::array<OracleId, 4> OracleId::all() {
    return {OracleId(0), OracleId(1), OracleId(2), OracleId(3)};
}

std::string OracleId::tag_string() const {
    return kTagNames[tag_];
}

std::array<int, 2> OracleId::signs() const {
    const std::size_t u = tag_ >> 1;
    const std::size_t v = tag_ & 1;
    return {v ? +1 : -1, u ? +1 : -1};
}

GateSequence prep_sequence(const Conventions &, const GateTimings &timings) {
    GateSequence seq;
    append_rotation_layer(seq, Axis::Y, M_PI / 2, Axis::Y, M_PI / 2, timings);
    return seq;
}

GateSequence oracle_sequence(OracleId id, const Conventions &, const GateTimings &timings) {
    const auto s = id.signs();
    GateSequence seq;
    seq.push_back(Gate::iswap(timings.iswap_ns()));
    append_rotation_layer(seq, Axis::Z, s[0] * M_PI / 2, Axis::Z, s[1] * M_PI / 2, timings);
    return seq;
}

GateSequence decode_sequence(const Conventions &conventions, const GateTimings &timings) {
    const Axis axis = conventions.decode_axis;
    GateSequence seq;
    seq.push_back(Gate::iswap(timings.iswap_ns()));
    append_rotation_layer(seq, axis, M_PI / 2, axis, M_PI / 2, timings);
    return seq;
}

PureState uniform_superposition() {
    return PureState({0.5, 0.5, 0.5, 0.5});
}

PureState tagged_state(OracleId id) {
    std::vector<Complex> amps(4, 0.5);
    amps[id.tag()] = -0.5;
    return PureState(std::move(amps));
}

DensityMatrix ideal_tagged_state(OracleId id) {
    ComplexMatrix m(4);
    const std::size_t t = id.tag();
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t s = 0; s < 4; ++s) {
            const double phase = M_PI * ((r == t ? 1 : 0) + (s == t ? 1 : 0));
            m(r, s) = 0.25 * std::exp(kImag * phase);
        }
    }
    return DensityMatrix(m);
}

GroverTrajectory simulate_trajectory(OracleId id, const NoiseParams &noise, const Conventions &conventions,
                                     const GateTimings &timings) {
    DensityMatrix prep = evolve_sequence(DensityMatrix::basis(0), prep_sequence(conventions, timings), noise, conventions);
    DensityMatrix oracle = evolve_sequence(prep, oracle_sequence(id, conventions, timings), noise, conventions);
    DensityMatrix decode = evolve_sequence(oracle, decode_sequence(conventions, timings), noise, conventions);
    return {prep, oracle, decode};
}

AlgorithmResult run_algorithm(OracleId id, const GroverSetup &setup) {
    const std::size_t tag = id.tag();
    const GroverTrajectory traj = simulate_trajectory(id, setup.noise, setup.conventions, setup.timings);

    DensityMatrix at_readout = traj.after_decode;
    if (setup.pre_readout_idle_ns > 0.0) {
        at_readout = evolve_step(at_readout, Gate::idle(setup.pre_readout_idle_ns), setup.noise, setup.conventions);
    }

    AlgorithmResult result;
    result.oracle = id;
    result.outcome_probabilities = outcome_distribution(at_readout, setup.readout);
    result.exact_success_probability = result.outcome_probabilities[tag];
    result.final_tag_population = traj.after_decode(tag, tag).real();
    result.shots = setup.shots;
    if (setup.shots) {
        result.outcome_counts = sample_shots(result.outcome_probabilities, *setup.shots,
                                             derive_seed(setup.seed, {kSingleRunStream, tag}));
        result.success_probability =
            static_cast<double>(result.outcome_counts[tag]) / static_cast<double>(*setup.shots);
    } else {
        result.success_probability = result.exact_success_probability;
    }

    if (setup.with_tomography) {
        TomographyOptions options;
        options.timings = setup.timings;
        options.ideal_prerotations = setup.ideal_prerotations;
        auto sampling_for = [&](std::uint64_t stage) {
            return Sampling{setup.tomography_shots, derive_seed(setup.seed, {kTomographyStream, tag, stage})};
        };
        result.after_oracle = reconstruct(traj.after_oracle, setup.readout, sampling_for(0), setup.conventions,
                                          setup.noise, options);
        result.final_state = reconstruct(traj.after_decode, setup.readout, sampling_for(1), setup.conventions,
                                         setup.noise, options);
        result.f_int = state_fidelity(result.after_oracle->physical, tagged_state(id));
        result.f_final = state_fidelity(result.final_state->physical, PureState::basis(4, tag));
    }
    return result;
}

std::array<AlgorithmResult, 4> run_all_oracles(const GroverSetup &setup) {
    const auto ids = OracleId::all();
    if (setup.threads <= 1) {
        return {run_algorithm(ids[0], setup), run_algorithm(ids[1], setup), run_algorithm(ids[2], setup),
                run_algorithm(ids[3], setup)};
    }
    std::array<std::future<AlgorithmResult>, 4> jobs;
    for (std::size_t k = 0; k < 4; ++k) {
        jobs[k] = std::async(std::launch::async, [&setup, id = ids[k]] { return run_algorithm(id, setup); });
    }
    return {jobs[0].get(), jobs[1].get(), jobs[2].get(), jobs[3].get()};
}

ConditionalTable::ConditionalTable(const Entries &entries) : p_(entries) {
    for (std::size_t t = 0; t < 4; ++t) {
        double sum = 0.0;
        for (std::size_t o = 0; o < 4; ++o) {
            if (!std::isfinite(p_[o][t]) || p_[o][t] < 0.0) {
                throw_invalid_argument("conditional table entries must be finite and non-negative");
            }
            sum += p_[o][t];
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw_invalid_argument("conditional table column " + std::string(kTagNames[t]) + " does not sum to 1");
        }
    }
}

ConditionalTable ConditionalTable::identity() {
    Entries e{};
    for (std::size_t k = 0; k < 4; ++k) {
        e[k][k] = 1.0;
    }
    return ConditionalTable(e);
}

ConditionalTable table_from_results(const std::array<AlgorithmResult, 4> &results) {
    ConditionalTable::Entries e{};
    for (std::size_t t = 0; t < 4; ++t) {
        const AlgorithmResult &r = results[t];
        const Distribution column = r.shots ? frequencies(r.outcome_counts) : r.outcome_probabilities;
        for (std::size_t o = 0; o < 4; ++o) {
            e[o][t] = column[o];
        }
    }
    return ConditionalTable(e);
}

ConditionalTable conditional_table(const GroverSetup &setup) {
    return table_from_results(run_all_oracles(setup));
}

ConditionalTable parse_conditional_table_csv(std::istream &in) {
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        rows.push_back(line);
    }
    if (rows.size() != 5) {
        throw_invalid_argument("conditional table needs a header and 4 rows");
    }
    ConditionalTable::Entries e{};
    for (std::size_t o = 0; o < 4; ++o) {
        std::istringstream fields(rows[o + 1]);
        std::string cell;
        std::getline(fields, cell, ',');
        if (cell != kTagNames[o]) {
            throw_invalid_argument("conditional table row " + std::to_string(o) + " should be labeled " +
                                   kTagNames[o]);
        }
        for (std::size_t t = 0; t < 4; ++t) {
            if (!std::getline(fields, cell, ',')) {
                throw_invalid_argument("conditional table row " + std::string(kTagNames[o]) + " is short");
            }
            try {
                e[o][t] = std::stod(cell);
            } catch (const std::logic_error &) {
                throw_invalid_argument("bad number '" + cell + "' in conditional table");
            }
        }
    }
    return ConditionalTable(e);
}

std::string format_conditional_table_csv(const ConditionalTable &table) {
    std::string out = "ab/uv,|00>,|01>,|10>,|11>\n";
    char buf[64];
    for (std::size_t o = 0; o < 4; ++o) {
        out += kTagNames[o];
        for (std::size_t t = 0; t < 4; ++t) {
            std::snprintf(buf, sizeof(buf), ",%.6g", table(o, t));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

OutcomeFidelity outcome_fidelity(const ConditionalTable &table) {
    OutcomeFidelity f;
    for (std::size_t ab = 0; ab < 4; ++ab) {
        double row = 0.0;
        for (std::size_t uv = 0; uv < 4; ++uv) {
            row += table(ab, uv);
        }
        if (row <= 0.0) {
            throw DegenerateTableError("outcome " + std::string(kTagNames[ab]) + " never occurs");
        }
        f.per_outcome[ab] = table(ab, ab) / row;
        f.average += 0.25 * f.per_outcome[ab];
    }
    return f;
}

bool conventions_are_deterministic(const Conventions &conventions) {
    const NoiseParams quiet = NoiseParams::disabled();
    const GateTimings timings;
    for (OracleId id : OracleId::all()) {
        const GroverTrajectory traj = simulate_trajectory(id, quiet, conventions, timings);
        // Global phase is invisible here: |<psi_tag|rho|psi_tag>| = 1 iff equal up to phase.
        if (std::abs(state_fidelity(traj.after_oracle, tagged_state(id)) - 1.0) > 1e-10) {
            return false;
        }
        if (std::abs(traj.after_decode(id.tag(), id.tag()).real() - 1.0) > 1e-10) {
            return false;
        }
    }
    return true;
}

std::vector<Conventions> deterministic_conventions() {
    std::vector<Conventions> out;
    for (const Conventions &c : all_conventions()) {
        if (conventions_are_deterministic(c)) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace tgrover
