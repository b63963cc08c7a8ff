// Golden-file tests for the CLI surface: every corpus entry pins the exact
// report text and exit status. Regenerate with UPDATE_GOLDEN=1 after an
// intentional output change, then review the diff before committing.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "posscalc/runner.hpp"

using namespace posscalc;

namespace {

struct GoldenCase {
    const char* name;        // golden/<name>.spec and golden/<name>.out
    const char* subcommand;
    std::vector<std::string> args;
    int expected_exit;
    bool machine = false;
};

// trials is kept tiny so the randomized campaign inside `theorems` stays fast;
// the reports are deterministic either way.
const std::vector<GoldenCase> kCases = {
    {"basic_validate", "validate", {}, 0},
    {"basic_validate_machine", "validate", {}, 0, true},
    {"basic_classify_event", "classify", {"E"}, 0},
    {"basic_classify_outcome", "classify", {"s2"}, 0},
    {"basic_condition", "condition", {"E"}, 0},
    {"basic_correspondence", "correspondence", {}, 0},
    {"basic_theorems", "theorems", {}, 0},
    {"null_event_classify", "classify", {"Zero"}, 0},
    {"null_event_condition", "condition", {"Zero"}, 1},
    {"null_event_reduce", "reduce", {}, 0},
    {"correspondence_fails", "correspondence", {}, 1},
    {"negative_weight", "validate", {}, 1},
    {"unnormalized", "validate", {}, 1},
    {"simulate_small", "simulate", {}, 0},
    {"beliefs_consistent", "beliefs", {}, 0},
    {"beliefs_contradiction", "beliefs", {}, 1},
    {"malformed_fraction", "validate", {}, 2},
    {"duplicate_outcome", "validate", {}, 2},
    {"undeclared_member", "classify", {"E"}, 2},
    {"many_errors", "validate", {}, 2},
    {"unknown_event", "classify", {"Nope"}, 2},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("golden corpus matches byte for byte") {
    const bool update = std::getenv("UPDATE_GOLDEN") != nullptr;
    for (const auto& c : kCases) {
        CAPTURE(c.name);
        std::string spec = read_file(std::string(GOLDEN_DIR) + "/" + c.name +
                                     ".spec");
        RunOptions opts;
        opts.machine = c.machine;
        opts.trials = 25;
        auto outcome = run_command(c.subcommand, c.args, spec, opts);
        CHECK(outcome.exit_code == c.expected_exit);

        std::string out_path =
            std::string(GOLDEN_DIR) + "/" + c.name + ".out";
        if (update) {
            std::ofstream out(out_path, std::ios::binary);
            out << outcome.report;
            continue;
        }
        CHECK(outcome.report == read_file(out_path));
    }
}

TEST_CASE("the installed binary honors the exit-code contract") {
    auto run_bin = [](const std::string& args) {
        std::string cmd = std::string(POSSCALC_BIN) + " " + args +
                          " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const std::string dir = GOLDEN_DIR;
    CHECK(run_bin("validate " + dir + "/basic_validate.spec") == 0);
    CHECK(run_bin("validate " + dir + "/negative_weight.spec") == 1);
    CHECK(run_bin("validate " + dir + "/malformed_fraction.spec") == 2);
    CHECK(run_bin("classify " + dir + "/basic_validate.spec Nope") == 2);
    CHECK(run_bin("frobnicate " + dir + "/basic_validate.spec") == 2);
    CHECK(run_bin("validate /no/such/file.spec") == 2);
    CHECK(run_bin("--help") == 0);
}
