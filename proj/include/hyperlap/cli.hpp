// Copyright 2026 the hyperlap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Commands: constants, ratio, eig, sweep, polya,
// ltcheck, sobolev. Exit codes: 0 success (bound holds), 1 bound violated,
// 2 invalid input, 3 convergence or certification failure.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hyperlap::cli {

enum ExitCode : int {
    kOk = 0,
    kViolated = 1,
    kInvalidInput = 2,
    kNumericalFailure = 3,
};

struct RunConfig {
    std::string command;
    /// Long flag name (without dashes) -> value. Output paths live here too
    /// ("csv", "json", "svg", "dump-matrix"); an empty "json" means stdout.
    std::map<std::string, std::string> parameters;
};

/// Long flag names accepted by a command; empty for unknown commands.
std::vector<std::string> known_flags(const std::string& command);

/// Merges a JSON config object into config.parameters without overriding
/// keys already present. Unknown keys throw std::invalid_argument.
void merge_config_file(RunConfig& config, const std::string& path);

/// Executes a parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlap::cli
