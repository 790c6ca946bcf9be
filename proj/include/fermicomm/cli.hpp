// Copyright 2026 The fermicomm Authors
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


#ifndef FERMICOMM_CLI_HPP
#define FERMICOMM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fermicomm/errors.hpp"

namespace fermicomm {

/// Malformed command line or configuration; maps to exit status 2.
struct UsageError : DomainError {
    using DomainError::DomainError;
};

struct RunConfig {
    std::string command;  ///< dims, verify, basis, invariants, magic, oracle
    std::string mode;     ///< magic: exact or mc
    std::string group = "pp";
    int n = 1;
    int n_max = 0;  ///< magic: last n of a sweep (0 for a single n)
    int t = 1;
    int r = -1;
    bool all_r = false;  ///< magic pp: r = 1..min(n, 4)
    int k = 1;
    std::string ensemble = "gauss";
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::uint64_t samples = 0;
    int max_qubits = 0;  ///< 0 keeps the default or FERMICOMM_MAX_QUBITS
    std::uint64_t max_operator_dim = std::uint64_t{1} << 32;
    std::string output;  ///< file (directory for basis); empty writes to stdout
    std::string format = "json";
    std::string state;
    std::string quantity = "all";
    std::string plot_data;
    double tol = 1e-9;
    bool with_basis = false;
    bool oracle = false;
    bool timestamp = false;
    int threads = 0;
};

/// Parses argv (argv[0] is the program name). Throws UsageError on bad input.
/// Returns a config with an empty command when help was requested; the help
/// text is written to `out`.
RunConfig parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Executes one command. Returns 0 on success, 1 on a failed verification,
/// 2 on a usage or domain error and 3 when a resource cap would be exceeded.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line followed by run.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermicomm

#endif
