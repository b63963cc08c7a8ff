#include <doctest.h>

#include "posscalc/runner.hpp"

using namespace posscalc;

namespace {

const std::string kBasic =
    "outcomes: s1 s2 s3\n"
    "event E = s2 s3\n"
    "measure: s1=1/2 s2=1/4 s3=1/4\n"
    "possible: s1 s2 s3\n";

// The central object of interest: a possible event with zero probability.
const std::string kPossibleInsignificant =
    "outcomes: s1 s2\n"
    "event E = s2\n"
    "measure: s1=1 s2=0\n"
    "possible: s1 s2\n";

RunOutcome run(const std::string& sub, const std::string& text,
               std::vector<std::string> args = {}, RunOptions opts = {}) {
    return run_command(sub, args, text, opts);
}

}  // namespace

TEST_CASE("validate passes a proper measure") {
    auto r = run("validate", kBasic);
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("result: valid") != std::string::npos);
}

TEST_CASE("validate flags a negative weight with exit 1") {
    auto r = run("validate",
                 "outcomes: s1 s2\n"
                 "measure: s1=-1/4 s2=5/4\n");
    CHECK(r.exit_code == 1);
    CHECK(r.report.find("non_negativity: FAIL") != std::string::npos);
    CHECK(r.report.find("{s1}") != std::string::npos);
}

TEST_CASE("classify reports the possible-but-insignificant case") {
    auto r = run("classify", kPossibleInsignificant, {"E"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("significance: insignificant") != std::string::npos);
    CHECK(r.report.find("modal: possible") != std::string::npos);
}

TEST_CASE("classify accepts a raw outcome label as a singleton") {
    auto r = run("classify", kBasic, {"s2"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("probability: 1/4") != std::string::npos);
}

TEST_CASE("classify of an unknown event is a usage error") {
    auto r = run("classify", kBasic, {"Nope"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("condition prints the rescaled weights") {
    auto r = run("condition", kBasic, {"E"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("refined_outcomes: s2 s3") != std::string::npos);
    CHECK(r.report.find("weight {s2}: 1/2") != std::string::npos);
}

TEST_CASE("conditioning on a null event exits 1") {
    auto r = run("condition", kPossibleInsignificant, {"E"});
    CHECK(r.exit_code == 1);
    CHECK(r.report.find("insignificant") != std::string::npos);
}

TEST_CASE("correspondence holds and fails with matching exit codes") {
    CHECK(run("correspondence", kBasic).exit_code == 0);
    auto fail = run("correspondence",
                    "outcomes: s1 s2\n"
                    "measure: s1=3/4 s2=1/4\n"
                    "possible: s1\n");
    CHECK(fail.exit_code == 1);
    CHECK(fail.report.find("witness: {s2}") != std::string::npos);
}

TEST_CASE("reduce emits the refinement and the dichotomy check") {
    auto r = run("reduce", kPossibleInsignificant);
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("refined_outcomes: s1") != std::string::npos);
    CHECK(r.report.find("possible <=> significant: PASS") != std::string::npos);
}

TEST_CASE("theorems passes on a well-formed file") {
    RunOptions opts;
    opts.trials = 50;
    auto r = run("theorems", kBasic, {}, opts);
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("theorems: PASS") != std::string::npos);
}

TEST_CASE("simulate is reproducible and honors the seed override") {
    const std::string spec =
        "multinomial: m=2 theta=1/2,1/2 k=256 seed=5\n";
    auto a = run("simulate", spec);
    auto b = run("simulate", spec);
    CHECK(a.exit_code == 0);
    CHECK(a.report == b.report);

    RunOptions opts;
    opts.seed_override = 6;
    auto c = run("simulate", spec, {}, opts);
    CHECK(c.report != a.report);
    CHECK(c.report.find("seed: 6") != std::string::npos);
}

TEST_CASE("beliefs exits 1 on contradiction") {
    auto ok = run("beliefs", "beliefs: exchangeable impossible(a)\n");
    CHECK(ok.exit_code == 0);
    CHECK(ok.report.find("Pr(theta_a=0)=1") != std::string::npos);

    auto bad =
        run("beliefs", "beliefs: exchangeable possible(a) prob_zero(a)\n");
    CHECK(bad.exit_code == 1);
    CHECK(bad.report.find("consistent: no") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with diagnostics") {
    auto r = run("validate", "outcomes: s1 s1\n");
    CHECK(r.exit_code == 2);
    CHECK(r.report.find("line 1") != std::string::npos);
}

TEST_CASE("unknown subcommand exits 2") {
    CHECK(run("frobnicate", kBasic).exit_code == 2);
}

TEST_CASE("machine mode emits the same content as key=value records") {
    RunOptions opts;
    opts.machine = true;
    auto r = run("validate", kBasic, {}, opts);
    CHECK(r.report.find("result=valid") != std::string::npos);
    CHECK(r.report.find("== ") == std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
    RunOptions opts;
    opts.trials = 20;
    auto a = run("theorems", kBasic, {}, opts);
    auto b = run("theorems", kBasic, {}, opts);
    CHECK(a.report == b.report);
}
