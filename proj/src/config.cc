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

#include "tgrover/config.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#ifndef TGROVER_DATA_DIR
#define TGROVER_DATA_DIR "data"
#endif

namespace tgrover {

namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used == value.size() && std::isfinite(x)) {
            return x;
        }
    } catch (const std::logic_error &) {
    }
    throw ConfigError(key, "expected a number, got '" + value + "'");
}

std::uint64_t parse_uint(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        if (!value.empty() && value[0] != '-') {
            const unsigned long long x = std::stoull(value, &used);
            if (used == value.size()) {
                return x;
            }
        }
    } catch (const std::logic_error &) {
    }
    throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
}

bool parse_bool(const std::string &key, const std::string &value) {
    if (value == "on" || value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "off" || value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError(key, "expected on/off, got '" + value + "'");
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

const char *fmt_bool(bool b) {
    return b ? "on" : "off";
}

using Setter = std::function<void(RunConfig &, const std::string &, const std::string &)>;

template <typename Field>
Setter double_field(Field field) {
    return [field](RunConfig &c, const std::string &k, const std::string &v) { field(c) = parse_double(k, v); };
}

template <typename Field>
Setter bool_field(Field field) {
    return [field](RunConfig &c, const std::string &k, const std::string &v) { field(c) = parse_bool(k, v); };
}

template <typename Field>
Setter uint_field(Field field) {
    return [field](RunConfig &c, const std::string &k, const std::string &v) { field(c) = parse_uint(k, v); };
}

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> table = {
        {"t1_i_ns", double_field([](RunConfig &c) -> double & { return c.noise.t1_i_ns; })},
        {"t1_ii_ns", double_field([](RunConfig &c) -> double & { return c.noise.t1_ii_ns; })},
        {"tphi_i_ns", double_field([](RunConfig &c) -> double & { return c.noise.tphi_i_ns; })},
        {"tphi_ii_ns", double_field([](RunConfig &c) -> double & { return c.noise.tphi_ii_ns; })},
        {"noise_enabled", bool_field([](RunConfig &c) -> bool & { return c.noise.enabled; })},
        {"e0_i", double_field([](RunConfig &c) -> double & { return c.unshelved_i.e0; })},
        {"e1_i", double_field([](RunConfig &c) -> double & { return c.unshelved_i.e1; })},
        {"e0_ii", double_field([](RunConfig &c) -> double & { return c.unshelved_ii.e0; })},
        {"e1_ii", double_field([](RunConfig &c) -> double & { return c.unshelved_ii.e1; })},
        {"e0_i_shelved", double_field([](RunConfig &c) -> double & { return c.shelved_i.e0; })},
        {"e2_i", double_field([](RunConfig &c) -> double & { return c.shelved_i.e1; })},
        {"e0_ii_shelved", double_field([](RunConfig &c) -> double & { return c.shelved_ii.e0; })},
        {"e2_ii", double_field([](RunConfig &c) -> double & { return c.shelved_ii.e1; })},
        {"shelving", bool_field([](RunConfig &c) -> bool & { return c.shelving; })},
        {"chi", double_field([](RunConfig &c) -> double & { return c.chi; })},
        {"readout_errors", bool_field([](RunConfig &c) -> bool & { return c.readout_errors; })},
        {"shots", uint_field([](RunConfig &c) -> std::uint64_t & { return c.shots; })},
        {"tomo_shots", uint_field([](RunConfig &c) -> std::uint64_t & { return c.tomo_shots; })},
        {"exact", bool_field([](RunConfig &c) -> bool & { return c.exact; })},
        {"seed", uint_field([](RunConfig &c) -> std::uint64_t & { return c.seed; })},
        {"rotation_sign",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             if (v == "+1" || v == "1") {
                 c.conventions.rotation_sign = 1;
             } else if (v == "-1") {
                 c.conventions.rotation_sign = -1;
             } else {
                 throw ConfigError(k, "expected +1 or -1, got '" + v + "'");
             }
         }},
        {"iswap_phase",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             if (v == "+i" || v == "i") {
                 c.conventions.iswap_phase = IswapPhase::kPlusI;
             } else if (v == "-i") {
                 c.conventions.iswap_phase = IswapPhase::kMinusI;
             } else {
                 throw ConfigError(k, "expected +i or -i, got '" + v + "'");
             }
         }},
        {"decode_axis",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             if (v == "X") {
                 c.conventions.decode_axis = Axis::X;
             } else if (v == "Y") {
                 c.conventions.decode_axis = Axis::Y;
             } else {
                 throw ConfigError(k, "expected X or Y, got '" + v + "'");
             }
         }},
        {"single_qubit_ns", double_field([](RunConfig &c) -> double & { return c.timings.single_qubit_ns; })},
        {"z_rotation_ns", double_field([](RunConfig &c) -> double & { return c.timings.z_rotation_ns; })},
        {"coupling_mhz", double_field([](RunConfig &c) -> double & { return c.timings.coupling_mhz; })},
        {"simultaneous_rotations",
         bool_field([](RunConfig &c) -> bool & { return c.timings.simultaneous_rotations; })},
        {"pre_readout_idle_ns", double_field([](RunConfig &c) -> double & { return c.pre_readout_idle_ns; })},
        {"ideal_prerotations", bool_field([](RunConfig &c) -> bool & { return c.ideal_prerotations; })},
        {"tomography", bool_field([](RunConfig &c) -> bool & { return c.tomography; })},
        {"threads",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             c.threads = static_cast<unsigned>(parse_uint(k, v));
         }},
        {"table1_path", [](RunConfig &c, const std::string &, const std::string &v) { c.table1_path = v; }},
    };
    return table;
}

void require(bool ok, const char *key, const std::string &what) {
    if (!ok) {
        throw ConfigError(key, what);
    }
}

void require_rates(const QubitReadoutErrors &e, const char *key0, const char *key1) {
    require(e.e0 >= 0.0 && e.e0 <= 1.0, key0, "must lie in [0, 1]");
    require(e.e1 >= 0.0 && e.e1 <= 1.0, key1, "must lie in [0, 1]");
    require(e.e0 + e.e1 < 1.0, key1, "readout contrast must be positive");
}

}  // namespace

RunConfig::RunConfig() : table1_path(std::string(TGROVER_DATA_DIR) + "/table1.csv") {
}

ReadoutErrorRates RunConfig::readout_rates() const {
    if (!readout_errors) {
        return ReadoutErrorRates::ideal();
    }
    const QubitReadoutErrors &qi = shelving ? shelved_i : unshelved_i;
    const QubitReadoutErrors &qii = shelving ? shelved_ii : unshelved_ii;
    ReadoutErrorRates r;
    r.e0_i = qi.e0;
    r.e1_i = qi.e1;
    r.e0_ii = qii.e0;
    r.e1_ii = qii.e1;
    r.shelving = shelving;
    r.crosstalk = chi;
    return r;
}

ReadoutMatrix RunConfig::readout_matrix() const {
    return build_readout_matrix(readout_rates());
}

GroverSetup RunConfig::grover_setup() const {
    GroverSetup s;
    s.noise = noise;
    s.readout = readout_matrix();
    s.conventions = conventions;
    s.timings = timings;
    s.shots = exact ? std::nullopt : std::optional<std::uint64_t>(shots);
    s.tomography_shots = exact ? std::nullopt : std::optional<std::uint64_t>(tomo_shots);
    s.seed = seed;
    s.with_tomography = tomography;
    s.ideal_prerotations = ideal_prerotations;
    s.pre_readout_idle_ns = pre_readout_idle_ns;
    s.threads = threads;
    return s;
}

void RunConfig::validate() const {
    if (noise.enabled) {
        require(noise.t1_i_ns > 0.0, "t1_i_ns", "must be > 0");
        require(noise.t1_ii_ns > 0.0, "t1_ii_ns", "must be > 0");
        require(noise.tphi_i_ns > 0.0, "tphi_i_ns", "must be > 0");
        require(noise.tphi_ii_ns > 0.0, "tphi_ii_ns", "must be > 0");
    }
    require_rates(unshelved_i, "e0_i", "e1_i");
    require_rates(unshelved_ii, "e0_ii", "e1_ii");
    require_rates(shelved_i, "e0_i_shelved", "e2_i");
    require_rates(shelved_ii, "e0_ii_shelved", "e2_ii");
    require(chi >= 0.0 && chi <= 0.1, "chi", "must lie in [0, 0.1]");
    require(shots >= 1, "shots", "must be >= 1");
    require(tomo_shots >= 1, "tomo_shots", "must be >= 1");
    require(timings.single_qubit_ns >= 0.0, "single_qubit_ns", "must be >= 0");
    require(timings.z_rotation_ns >= 0.0, "z_rotation_ns", "must be >= 0");
    require(timings.coupling_mhz > 0.0, "coupling_mhz", "must be > 0");
    require(pre_readout_idle_ns >= 0.0, "pre_readout_idle_ns", "must be >= 0");
    require(threads >= 1 && threads <= 256, "threads", "must lie in [1, 256]");
}

void set_config_value(RunConfig &config, const std::string &key, const std::string &value) {
    const auto it = setters().find(key);
    if (it == setters().end()) {
        throw ConfigError(key, "unknown key");
    }
    it->second(config, key, value);
}

void apply_config_text(RunConfig &config, std::istream &in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(trim(line), "line " + std::to_string(line_no) + " is not 'key = value'");
        }
        set_config_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void load_config_file(RunConfig &config, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open '" + path + "'");
    }
    apply_config_text(config, in);
}

std::string format_config(const RunConfig &c) {
    std::ostringstream out;
    out << "t1_i_ns = " << fmt_double(c.noise.t1_i_ns) << '\n'
        << "t1_ii_ns = " << fmt_double(c.noise.t1_ii_ns) << '\n'
        << "tphi_i_ns = " << fmt_double(c.noise.tphi_i_ns) << '\n'
        << "tphi_ii_ns = " << fmt_double(c.noise.tphi_ii_ns) << '\n'
        << "noise_enabled = " << fmt_bool(c.noise.enabled) << '\n'
        << "e0_i = " << fmt_double(c.unshelved_i.e0) << '\n'
        << "e1_i = " << fmt_double(c.unshelved_i.e1) << '\n'
        << "e0_ii = " << fmt_double(c.unshelved_ii.e0) << '\n'
        << "e1_ii = " << fmt_double(c.unshelved_ii.e1) << '\n'
        << "e0_i_shelved = " << fmt_double(c.shelved_i.e0) << '\n'
        << "e2_i = " << fmt_double(c.shelved_i.e1) << '\n'
        << "e0_ii_shelved = " << fmt_double(c.shelved_ii.e0) << '\n'
        << "e2_ii = " << fmt_double(c.shelved_ii.e1) << '\n'
        << "shelving = " << fmt_bool(c.shelving) << '\n'
        << "chi = " << fmt_double(c.chi) << '\n'
        << "readout_errors = " << fmt_bool(c.readout_errors) << '\n'
        << "shots = " << c.shots << '\n'
        << "tomo_shots = " << c.tomo_shots << '\n'
        << "exact = " << fmt_bool(c.exact) << '\n'
        << "seed = " << c.seed << '\n'
        << "rotation_sign = " << (c.conventions.rotation_sign > 0 ? "+1" : "-1") << '\n'
        << "iswap_phase = " << (c.conventions.iswap_phase == IswapPhase::kPlusI ? "+i" : "-i") << '\n'
        << "decode_axis = " << (c.conventions.decode_axis == Axis::X ? "X" : "Y") << '\n'
        << "single_qubit_ns = " << fmt_double(c.timings.single_qubit_ns) << '\n'
        << "z_rotation_ns = " << fmt_double(c.timings.z_rotation_ns) << '\n'
        << "coupling_mhz = " << fmt_double(c.timings.coupling_mhz) << '\n'
        << "simultaneous_rotations = " << fmt_bool(c.timings.simultaneous_rotations) << '\n'
        << "pre_readout_idle_ns = " << fmt_double(c.pre_readout_idle_ns) << '\n'
        << "ideal_prerotations = " << fmt_bool(c.ideal_prerotations) << '\n'
        << "tomography = " << fmt_bool(c.tomography) << '\n';
    return out.str();
}

}  // namespace tgrover
