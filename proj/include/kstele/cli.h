// Copyright 2026 The kstele Authors
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

#ifndef KSTELE_CLI_H
#define KSTELE_CLI_H

#include <cstdint>
#include <ostream>
#include <string>

namespace kstele {

enum class Command { Verify, Search, MinContext, BestClassical, Play, Hvt2d, Inspect };
enum class OutputFormat { Human, Json };

struct RunConfig {
    Command command = Command::Verify;
    /// "builtin" or a path to a vector-set file.
    std::string set_source = "builtin";
    uint64_t seed = 0;
    uint64_t rounds = 10000;
    /// quantum | best-classical | one-cbit | deterministic:<file> | mixture:<file>
    std::string strategy = "quantum";
    OutputFormat format = OutputFormat::Human;
    int alice_basis = 1;
    int bob_basis = 1;
    uint64_t samples = 1000000;
    size_t grid = 101;
    unsigned threads = 1;
};

constexpr int EXIT_OK = 0;
constexpr int EXIT_TOOL_ERROR = 1;
constexpr int EXIT_INVALID_SET = 2;

/// Executes one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv into a RunConfig and runs it.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace kstele

#endif
