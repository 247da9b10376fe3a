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

#ifndef TGROVER_COMMANDS_H
#define TGROVER_COMMANDS_H

#include <iosfwd>
#include <string>

#include "tgrover/config.h"

namespace tgrover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

// Each command computes everything first, then writes its files into out_dir
// (temp file + rename per file). Returns one of the exit codes above.

/// Runs the four oracles; writes report.txt, conditional_table.csv, sequence_<uv>.txt.
/// With use_table1, scores the shipped measured table instead of simulating.
int cmd_grover(const RunConfig &config, bool use_table1, const std::string &out_dir, std::ostream &out,
               std::ostream &err);

/// state_spec: phi | tagged:<uv> | basis:<uv> | sequence:<path>.
/// Writes rho_true.txt, rho_raw.txt, rho_physical.txt, tomo_report.txt.
int cmd_tomo(const RunConfig &config, const std::string &state_spec, const std::string &out_dir, std::ostream &out,
             std::ostream &err);

/// Crosstalk / pre-readout idle sweep. Writes calibration.cfg (loadable with --config)
/// and calibration_report.txt.
int cmd_calibrate(const RunConfig &config, const std::string &out_dir, std::ostream &out, std::ostream &err);

/// Writes readout_matrix.csv and prints the per-qubit contrasts.
int cmd_readout(const RunConfig &config, const std::string &out_dir, std::ostream &out, std::ostream &err);

/// Full command line: `<command> [flags]`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace tgrover

#endif
