// Copyright 2026 The SQPC Simulator Authors
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

#ifndef SQPC_CLI_COMMANDS_HPP
#define SQPC_CLI_COMMANDS_HPP

#include <ostream>
#include <string>

#include "sqpc/adversary/attack.hpp"

namespace sqpc::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitAborted = 2 };

/// Maps the --type / --phase flags to an attack. Types: none, ir1..ir3,
/// mr-leg1..mr-leg3, em-constrained, em-cnot. Throws ConfigError for an
/// unknown or unsupported combination.
adversary::AttackSpec parse_attack(const std::string& type, const std::string& phase,
                                   double theta = 0.3, double phi = 1.1);

/// Entry point of the `sqpc` tool. Reports go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sqpc::cli

#endif  // SQPC_CLI_COMMANDS_HPP
