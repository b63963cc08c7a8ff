#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posscalc {

struct RunOptions {
    bool machine = false;                       // key=value records
    std::optional<std::uint64_t> seed_override; // --seed
    std::size_t trials = 1000;                  // property campaign size
    std::size_t max_atoms = 20;                 // enumeration cap
};

struct RunOutcome {
    std::string report;
    int exit_code = 0;  // 0 pass/consistent, 1 violation, 2 usage/parse error
};

// Executes one subcommand against spec-file text. Subcommands: validate,
// classify <event>, condition <event>, correspondence, theorems, reduce,
// simulate, beliefs.
RunOutcome run_command(const std::string& subcommand,
                       const std::vector<std::string>& args,
                       const std::string& spec_text, const RunOptions& options);

}  // namespace posscalc
