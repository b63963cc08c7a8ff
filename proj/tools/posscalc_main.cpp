#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posscalc/runner.hpp"

namespace {

struct CommandSpec {
    const char* name;
    const char* description;
    bool takes_event;
};

constexpr CommandSpec kCommands[] = {
    {"validate", "Check the probability axioms of the measure block", false},
    {"classify", "Probability and modal classification of an event", true},
    {"condition", "Conditional measure on a significant event", true},
    {"correspondence", "Check that impossible events are insignificant", false},
    {"theorems", "Run the theorem oracles and the randomized campaign", false},
    {"reduce", "Refine the space so possibility and significance coincide", false},
    {"simulate", "Seeded repeated-trials simulation with convergence table", false},
    {"beliefs", "Close the belief state under the implication rules", false},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"posscalc - finite possibility/probability workbench"};
    app.require_subcommand(1);
    app.fallthrough();

    posscalc::RunOptions options;
    std::uint64_t seed_value = 0;
    bool seed_given = false;
    app.add_flag("--machine", options.machine,
                 "emit structured key=value records");
    auto* seed_opt =
        app.add_option("--seed", seed_value, "override the spec-file seed");
    app.add_option("--trials", options.trials,
                   "randomized property campaign size (default 1000)");
    app.add_option("--max-atoms", options.max_atoms,
                   "event enumeration cap (default 20)");

    std::string spec_path;
    std::string event_name;
    std::string chosen;
    for (const auto& command : kCommands) {
        auto* sub = app.add_subcommand(command.name, command.description);
        sub->add_option("spec", spec_path, "spec file")->required();
        if (command.takes_event)
            sub->add_option("event", event_name, "event or outcome name")
                ->required();
        sub->callback([&chosen, name = command.name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int cli_code = app.exit(e, std::cout, std::cerr);
        // Help/version print and exit cleanly; everything else is usage.
        return cli_code == 0 ? 0 : 2;
    }
    seed_given = seed_opt->count() > 0;
    if (seed_given) options.seed_override = seed_value;

    std::ifstream in(spec_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open spec file '" << spec_path << "'\n";
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();

    std::vector<std::string> args;
    if (!event_name.empty()) args.push_back(event_name);
    auto outcome = posscalc::run_command(chosen, args, text.str(), options);
    std::cout << outcome.report;
    return outcome.exit_code;
}
