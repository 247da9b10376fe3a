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

#ifndef TGROVER_CONFIG_H
#define TGROVER_CONFIG_H

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tgrover/gates.h"
#include "tgrover/grover.h"
#include "tgrover/noise.h"
#include "tgrover/readout.h"

namespace tgrover {

/// Bad configuration; `key` names the offending entry.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string key, const std::string &what)
        : std::runtime_error("config key '" + key + "': " + what), key_(std::move(key)) {
    }
    const std::string &key() const {
        return key_;
    }

   private:
    std::string key_;
};

/// Everything a command needs. Defaults are the device values used throughout.
struct RunConfig {
    NoiseParams noise;

    // Simultaneous-readout error rates, without and with |1> -> |2> shelving.
    QubitReadoutErrors unshelved_i{0.10, 0.16};
    QubitReadoutErrors unshelved_ii{0.12, 0.15};
    QubitReadoutErrors shelved_i{0.05, 0.11};
    QubitReadoutErrors shelved_ii{0.05, 0.12};
    bool shelving = true;
    double chi = 0.01;
    /// Off replaces the readout matrix by the identity.
    bool readout_errors = true;

    std::uint64_t shots = 10000;
    std::uint64_t tomo_shots = 10000;
    /// Use exact outcome distributions instead of sampling.
    bool exact = false;
    std::uint64_t seed = 1;

    Conventions conventions;
    GateTimings timings;
    double pre_readout_idle_ns = 0.0;
    bool ideal_prerotations = false;
    bool tomography = true;
    unsigned threads = 1;
    std::string table1_path;

    RunConfig();

    ReadoutErrorRates readout_rates() const;
    ReadoutMatrix readout_matrix() const;
    GroverSetup grover_setup() const;
    /// Throws ConfigError naming the first invalid key.
    void validate() const;
};

/// Sets one key from its text value. Throws ConfigError for unknown keys or bad values.
void set_config_value(RunConfig &config, const std::string &key, const std::string &value);

/// Flat "key = value" lines; '#' starts a comment.
void apply_config_text(RunConfig &config, std::istream &in);
void load_config_file(RunConfig &config, const std::string &path);

/// Every experiment key, one per line, in a form that apply_config_text reads back
/// exactly. Execution-only keys (threads, table1_path) are left out.
std::string format_config(const RunConfig &config);

}  // namespace tgrover

#endif
