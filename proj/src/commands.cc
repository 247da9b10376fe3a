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

#include "tgrover/commands.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "tgrover/calibration.h"
#include "tgrover/errors.h"
#include "tgrover/grover.h"
#include "tgrover/tomography.h"

namespace tgrover {

namespace {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Ordered file name -> contents, written only after every computation has finished.
using OutputFiles = std::vector<std::pair<std::string, std::string>>;

void write_outputs(const std::string &out_dir, const OutputFiles &files) {
    namespace fs = std::filesystem;
    std::error_code ec;
    const fs::path dir(out_dir.empty() ? "." : out_dir);
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'");
    }
    for (const auto &[name, contents] : files) {
        const fs::path target = dir / name;
        const fs::path temp = dir / (name + ".tmp");
        {
            std::ofstream f(temp, std::ios::binary | std::ios::trunc);
            if (!f || !(f << contents) || !f.flush()) {
                throw IoError("cannot write '" + temp.string() + "'");
            }
        }
        fs::rename(temp, target, ec);
        if (ec) {
            throw IoError("cannot rename '" + temp.string() + "' to '" + target.string() + "'");
        }
    }
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.6g", x + 0.0);
    return buf;
}

std::string percent(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * x);
    return buf;
}

std::string sign_text(int s) {
    return s > 0 ? "+" : "-";
}

std::string header(const RunConfig &c) {
    std::ostringstream h;
    h << "conventions " << c.conventions.str() << '\n';
    h << "noise enabled=" << (c.noise.enabled ? "on" : "off") << " t1_i_ns=" << fmt6(c.noise.t1_i_ns)
      << " t1_ii_ns=" << fmt6(c.noise.t1_ii_ns) << " tphi_i_ns=" << fmt6(c.noise.tphi_i_ns)
      << " tphi_ii_ns=" << fmt6(c.noise.tphi_ii_ns) << '\n';
    const ReadoutErrorRates r = c.readout_rates();
    h << "readout errors=" << (c.readout_errors ? "on" : "off") << " shelving=" << (c.shelving ? "on" : "off")
      << " e0_i=" << fmt6(r.e0_i) << " e1_i=" << fmt6(r.e1_i) << " e0_ii=" << fmt6(r.e0_ii)
      << " e1_ii=" << fmt6(r.e1_ii) << " chi=" << fmt6(r.crosstalk) << '\n';
    h << "timing single_qubit_ns=" << fmt6(c.timings.single_qubit_ns) << " z_rotation_ns="
      << fmt6(c.timings.z_rotation_ns) << " iswap_ns=" << fmt6(c.timings.iswap_ns())
      << " simultaneous_rotations=" << (c.timings.simultaneous_rotations ? "on" : "off")
      << " pre_readout_idle_ns=" << fmt6(c.pre_readout_idle_ns) << '\n';
    if (c.exact) {
        h << "sampling exact seed=" << c.seed << '\n';
    } else {
        h << "sampling shots=" << c.shots << " tomo_shots=" << c.tomo_shots << " seed=" << c.seed << '\n';
    }
    return h.str();
}

std::string fidelity_block(const OutcomeFidelity &f) {
    std::ostringstream s;
    static constexpr const char *kTags[] = {"00", "01", "10", "11"};
    for (std::size_t k = 0; k < 4; ++k) {
        s << "f_" << kTags[k] << " = " << percent(f.per_outcome[k]) << '\n';
    }
    s << "average = " << percent(f.average) << '\n';
    return s.str();
}

int report_failure(std::ostream &err, const std::exception &e, int code) {
    err << "error: " << e.what() << '\n';
    return code;
}

template <typename Body>
int guarded(std::ostream &err, Body body) {
    try {
        return body();
    } catch (const ConfigError &e) {
        return report_failure(err, e, kExitConfig);
    } catch (const IoError &e) {
        return report_failure(err, e, kExitIo);
    } catch (const std::invalid_argument &e) {
        return report_failure(err, e, kExitConfig);
    }
}

ConditionalTable load_table(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return parse_conditional_table_csv(in);
}

std::string grover_sequence_text(OracleId id, const RunConfig &c) {
    GateSequence seq = prep_sequence(c.conventions, c.timings);
    seq.append(oracle_sequence(id, c.conventions, c.timings));
    seq.append(decode_sequence(c.conventions, c.timings));
    std::ostringstream s;
    s << "# prep, oracle " << id.tag_string() << ", decode\n";
    write_sequence_text(s, seq);
    return s.str();
}

struct TomoTarget {
    DensityMatrix rho;
    PureState ideal;
};

TomoTarget tomo_target(const RunConfig &c, const std::string &spec) {
    auto tag_of = [&](const std::string &prefix) { return OracleId::from_tag(spec.substr(prefix.size())); };
    try {
        if (spec == "phi") {
            const PureState psi = uniform_superposition();
            return {DensityMatrix::from_pure(psi), psi};
        }
        if (spec.rfind("tagged:", 0) == 0) {
            const PureState psi = tagged_state(tag_of("tagged:"));
            return {DensityMatrix::from_pure(psi), psi};
        }
        if (spec.rfind("basis:", 0) == 0) {
            const PureState psi = PureState::basis(4, tag_of("basis:").tag());
            return {DensityMatrix::from_pure(psi), psi};
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError("state", e.what());
    }
    if (spec.rfind("sequence:", 0) == 0) {
        const std::string path = spec.substr(9);
        std::ifstream in(path);
        if (!in) {
            throw IoError("cannot open sequence file '" + path + "'");
        }
        GateSequence seq;
        try {
            seq = parse_sequence_text(in);
        } catch (const std::invalid_argument &e) {
            throw ConfigError("state", e.what());
        }
        const ComplexMatrix u = sequence_unitary(seq, c.conventions);
        std::vector<Complex> amps(4);
        for (std::size_t k = 0; k < 4; ++k) {
            amps[k] = u(k, 0);
        }
        return {evolve_sequence(DensityMatrix::basis(0), seq, c.noise, c.conventions),
                PureState::normalized(std::move(amps))};
    }
    throw ConfigError("state", "unknown state spec '" + spec + "' (phi, tagged:uv, basis:uv, sequence:path)");
}

}  // namespace

int cmd_grover(const RunConfig &config, bool use_table1, const std::string &out_dir, std::ostream &out,
               std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        std::ostringstream report;
        OutputFiles files;
        if (use_table1) {
            const ConditionalTable table = load_table(config.table1_path);
            report << "# outcome fidelity of the measured conditional table\n";
            report << format_conditional_table_csv(table);
            report << fidelity_block(outcome_fidelity(table));
            files.emplace_back("report.txt", report.str());
            write_outputs(out_dir, files);
            out << report.str();
            return kExitOk;
        }

        const auto results = run_all_oracles(config.grover_setup());
        const ConditionalTable table = table_from_results(results);

        report << "# grover search report\n" << header(config);
        for (const AlgorithmResult &r : results) {
            const auto s = r.oracle.signs();
            report << "\noracle " << r.oracle.tag_string() << " signs=(" << sign_text(s[0]) << ','
                   << sign_text(s[1]) << ")\n";
            if (r.shots) {
                report << "  counts 00=" << r.outcome_counts[0] << " 01=" << r.outcome_counts[1]
                       << " 10=" << r.outcome_counts[2] << " 11=" << r.outcome_counts[3] << '\n';
            }
            report << "  P_S = " << fmt6(r.success_probability) << '\n';
            report << "  P_S_exact = " << fmt6(r.exact_success_probability) << '\n';
            report << "  final_tag_population = " << fmt6(r.final_tag_population) << '\n';
            if (r.f_int) {
                report << "  F_int = " << fmt6(*r.f_int) << '\n';
                report << "  F_final = " << fmt6(*r.f_final) << '\n';
                report << "  rho_after_oracle\n" << format_matrix_text(r.after_oracle->physical.matrix());
                report << "  rho_final\n" << format_matrix_text(r.final_state->physical.matrix());
            }
        }
        report << "\n# conditional table p_ab/|uv>\n" << format_conditional_table_csv(table);
        try {
            report << fidelity_block(outcome_fidelity(table));
        } catch (const DegenerateTableError &e) {
            report << "outcome fidelity undefined: " << e.what() << '\n';
        }

        files.emplace_back("report.txt", report.str());
        files.emplace_back("conditional_table.csv", format_conditional_table_csv(table));
        for (OracleId id : OracleId::all()) {
            files.emplace_back("sequence_" + id.tag_string() + ".txt", grover_sequence_text(id, config));
        }
        write_outputs(out_dir, files);
        out << report.str();
        return kExitOk;
    });
}

int cmd_tomo(const RunConfig &config, const std::string &state_spec, const std::string &out_dir, std::ostream &out,
             std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        const TomoTarget target = tomo_target(config, state_spec);
        const Sampling sampling = config.exact ? Sampling{std::nullopt, config.seed}
                                               : Sampling::with_shots(config.tomo_shots, config.seed);
        TomographyOptions options;
        options.timings = config.timings;
        options.ideal_prerotations = config.ideal_prerotations;
        options.threads = config.threads;
        const ReconstructionResult result =
            reconstruct(target.rho, config.readout_matrix(), sampling, config.conventions, config.noise, options);
        const double fidelity = state_fidelity(result.physical, target.ideal);

        std::ostringstream report;
        report << "# tomography of " << state_spec << '\n' << header(config);
        report << format_reconstruction(result, fidelity, sampling);
        report << "trace_distance=" << fmt6(trace_distance(result.physical, target.rho)) << '\n';

        write_outputs(out_dir, {
                                   {"rho_true.txt", format_matrix_text(target.rho.matrix())},
                                   {"rho_raw.txt", format_matrix_text(result.raw)},
                                   {"rho_physical.txt", format_matrix_text(result.physical.matrix())},
                                   {"tomo_report.txt", report.str()},
                               });
        out << report.str();
        return kExitOk;
    });
}

int cmd_calibrate(const RunConfig &config, const std::string &out_dir, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        RunConfig rates_only = config;
        rates_only.chi = 0.0;
        const CalibrationResult cal =
            calibrate(config.noise, rates_only.readout_rates(), config.conventions, config.timings);

        static constexpr const char *kTags[] = {"00", "01", "10", "11"};
        std::ostringstream summary;
        summary << "best chi = " << fmt6(cal.best.crosstalk) << '\n';
        summary << "best pre_readout_idle_ns = " << fmt6(cal.best.pre_readout_idle_ns) << '\n';
        for (std::size_t t = 0; t < 4; ++t) {
            summary << "P_S " << kTags[t] << " = " << fmt6(cal.best.success[t]) << " target "
                    << fmt6(cal.targets[t]) << " residual " << fmt6(cal.best.success[t] - cal.targets[t]) << '\n';
        }
        summary << "rms_residual = " << fmt6(cal.rms_residual()) << '\n';

        // Monotonicity in chi at every idle value, per oracle; records the first idle row that breaks it.
        const std::size_t n_chi = CalibrationGrid::standard().crosstalk.size();
        std::array<std::optional<double>, 4> first_violation;
        for (std::size_t k = 0; k + 1 < cal.sweep.size(); ++k) {
            if ((k + 1) % n_chi == 0) {
                continue;
            }
            for (std::size_t t = 0; t < 4; ++t) {
                if (!first_violation[t] && cal.sweep[k + 1].success[t] > cal.sweep[k].success[t] + 1e-12) {
                    first_violation[t] = cal.sweep[k].pre_readout_idle_ns;
                }
            }
        }
        for (std::size_t t = 0; t < 4; ++t) {
            summary << "monotone_in_chi " << kTags[t] << " = ";
            if (first_violation[t]) {
                summary << "no (from idle_ns = " << fmt6(*first_violation[t]) << ")\n";
            } else {
                summary << "yes\n";
            }
        }

        std::ostringstream report;
        report << "# calibration sweep, exact outcome distributions\n" << header(config) << summary.str();
        report << "\n# idle_ns,chi,P_00,P_01,P_10,P_11,squared_error\n";
        for (const CalibrationPoint &p : cal.sweep) {
            report << fmt6(p.pre_readout_idle_ns) << ',' << fmt6(p.crosstalk);
            for (double s : p.success) {
                report << ',' << fmt6(s);
            }
            report << ',' << fmt6(p.squared_error) << '\n';
        }

        RunConfig fitted = config;
        fitted.chi = cal.best.crosstalk;
        fitted.pre_readout_idle_ns = cal.best.pre_readout_idle_ns;
        std::ostringstream cfg;
        cfg << "# best-fit calibration; load with --config\n";
        std::istringstream lines(summary.str());
        for (std::string line; std::getline(lines, line);) {
            cfg << "# " << line << '\n';
        }
        cfg << format_config(fitted);

        write_outputs(out_dir, {{"calibration.cfg", cfg.str()}, {"calibration_report.txt", report.str()}});
        out << summary.str();
        return kExitOk;
    });
}

int cmd_readout(const RunConfig &config, const std::string &out_dir, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        const ReadoutErrorRates rates = config.readout_rates();
        const ReadoutMatrix r = build_readout_matrix(rates);
        const std::string csv = format_readout_csv(r);
        std::ostringstream text;
        text << csv;
        text << "contrast_I = " << fmt6(rates.qubit(Qubit::I).contrast()) << '\n';
        text << "contrast_II = " << fmt6(rates.qubit(Qubit::II).contrast()) << '\n';
        write_outputs(out_dir, {{"readout_matrix.csv", csv}});
        out << text.str();
        return kExitOk;
    });
}

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<unsigned> threads;
    std::optional<double> chi;
    std::optional<std::string> shelving;
    std::vector<std::string> overrides;
    bool no_noise = false;
    bool exact = false;
    std::string out_dir = ".";
};

void add_common(CLI::App *sub, CommonFlags &f) {
    sub->add_option("--config", f.config_path, "key = value configuration file");
    sub->add_option("--seed", f.seed, "master seed");
    sub->add_option("--shots", f.shots, "shots per run (per setting for tomo)");
    sub->add_option("--threads", f.threads, "worker threads");
    sub->add_option("--chi", f.chi, "readout crosstalk probability");
    sub->add_option("--shelving", f.shelving, "on|off");
    sub->add_option("--set", f.overrides, "override any config key: key=value")->take_all();
    sub->add_flag("--no-noise", f.no_noise, "disable decoherence and readout errors");
    sub->add_flag("--exact", f.exact, "use exact outcome distributions instead of sampling");
    sub->add_option("--out", f.out_dir, "output directory");
}

RunConfig resolve_config(const CommonFlags &f, bool shots_are_tomography) {
    RunConfig c;
    if (!f.config_path.empty()) {
        load_config_file(c, f.config_path);
    }
    for (const std::string &kv : f.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(kv, "--set expects key=value");
        }
        set_config_value(c, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (f.seed) {
        c.seed = *f.seed;
    }
    if (f.shots) {
        set_config_value(c, shots_are_tomography ? "tomo_shots" : "shots", std::to_string(*f.shots));
    }
    if (f.threads) {
        c.threads = *f.threads;
    }
    if (f.chi) {
        c.chi = *f.chi;
    }
    if (f.shelving) {
        set_config_value(c, "shelving", *f.shelving);
    }
    if (f.no_noise) {
        c.noise.enabled = false;
        c.readout_errors = false;
    }
    if (f.exact) {
        c.exact = true;
    }
    c.validate();
    return c;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-transmon Grover search simulator"};
    app.require_subcommand(1);

    CommonFlags grover_flags;
    bool table1 = false;
    CLI::App *grover = app.add_subcommand("grover", "run the four-oracle search");
    add_common(grover, grover_flags);
    grover->add_flag("--table1", table1, "score the shipped measured conditional table");

    CommonFlags tomo_flags;
    std::string state = "phi";
    CLI::App *tomo = app.add_subcommand("tomo", "simulate state tomography of an ideal state");
    add_common(tomo, tomo_flags);
    tomo->add_option("--state,state", state, "phi | tagged:uv | basis:uv | sequence:path");

    CommonFlags calibrate_flags;
    CLI::App *calibrate_cmd = app.add_subcommand("calibrate", "fit crosstalk and pre-readout idle");
    add_common(calibrate_cmd, calibrate_flags);

    CommonFlags readout_flags;
    CLI::App *readout = app.add_subcommand("readout", "print the readout matrix");
    add_common(readout, readout_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (grover->parsed()) {
            return cmd_grover(resolve_config(grover_flags, false), table1, grover_flags.out_dir, out, err);
        }
        if (tomo->parsed()) {
            return cmd_tomo(resolve_config(tomo_flags, true), state, tomo_flags.out_dir, out, err);
        }
        if (calibrate_cmd->parsed()) {
            return cmd_calibrate(resolve_config(calibrate_flags, false), calibrate_flags.out_dir, out, err);
        }
        return cmd_readout(resolve_config(readout_flags, false), readout_flags.out_dir, out, err);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace tgrover
