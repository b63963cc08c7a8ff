#include <doctest.h>

#include <random>

#include "posscalc/measure.hpp"

using namespace posscalc;

namespace {

SigmaField field3() {
    return discrete_field(OutcomeSpace({"s1", "s2", "s3"}));
}

std::vector<Rational> rats(std::initializer_list<const char*> fractions) {
    std::vector<Rational> out;
    for (const char* f : fractions) out.push_back(*parse_rational(f));
    return out;
}

ProbabilityMeasure half_quarter_quarter() {
    return ProbabilityMeasure(field3(), rats({"1/2", "1/4", "1/4"}));
}

}  // namespace

TEST_CASE("validate_measure accepts the uniform measure") {
    auto field = discrete_field(OutcomeSpace({"a", "b"}));
    auto result = validate_measure(field, rats({"1/2", "1/2"}));
    CHECK(result.valid());
    REQUIRE(result.measure);
    CHECK(result.measure->prob(field.space().full_event()) == 1);
}

TEST_CASE("validate_measure reports Norming with the actual sum") {
    auto field = discrete_field(OutcomeSpace({"a", "b"}));
    auto result = validate_measure(field, rats({"1/2", "1/3"}));
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].axiom == "Norming");
    CHECK(result.violations[0].witness.find("5/6") != std::string::npos);
}

TEST_CASE("validate_measure reports Non-negativity with the offending atom") {
    auto field = discrete_field(OutcomeSpace({"a", "b"}));
    auto result = validate_measure(field, rats({"-1/4", "5/4"}));
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].axiom == "Non-negativity");
    CHECK(result.violations[0].witness.find("{a}") != std::string::npos);
}

TEST_CASE("validate_measure rejects a weight-count mismatch outright") {
    CHECK_THROWS_AS(validate_measure(field3(), rats({"1/2", "1/2"})),
                    DomainError);
}

TEST_CASE("prob evaluates by atom sums") {
    auto m = half_quarter_quarter();
    const auto& s = m.space();
    CHECK(m.prob(s.full_event()) == 1);
    CHECK(m.prob(s.empty_event()) == 0);
    std::vector<std::string> e{"s2", "s3"};
    CHECK(m.prob(s.event_of(e)) == Rational(1, 2));
}

TEST_CASE("prob rejects non-measurable events") {
    OutcomeSpace s({"s1", "s2", "s3"});
    ProbabilityMeasure m(SigmaField(s, {s.singleton(0),
                                        s.singleton(1) | s.singleton(2)}),
                         rats({"1/2", "1/2"}));
    CHECK_THROWS_AS(m.prob(s.singleton(1)), DomainError);
}

TEST_CASE("classify hits the exact boundaries") {
    auto m = half_quarter_quarter();
    const auto& s = m.space();
    CHECK(m.classify(s.empty_event()).describe() == "insignificant");
    CHECK(m.classify(s.full_event()).describe() == "significant, almost sure");
    CHECK(m.classify(s.singleton(0)).describe() ==
          "significant, not almost sure");
}

TEST_CASE("conditioning rescales weights per the conditional formula") {
    auto m = half_quarter_quarter();
    std::vector<std::string> e{"s2", "s3"};
    auto sub = m.condition(m.space().event_of(e));
    REQUIRE(sub.space().labels() == std::vector<std::string>{"s2", "s3"});
    CHECK(sub.atom_weights() == rats({"1/2", "1/2"}));
    CHECK(sub.prob(sub.space().full_event()) == 1);
}

TEST_CASE("conditioning on the whole space is the identity") {
    auto m = half_quarter_quarter();
    auto sub = m.condition(m.space().full_event());
    CHECK(sub.space() == m.space());
    CHECK(sub.atom_weights() == m.atom_weights());
}

TEST_CASE("conditioning on a null event is a hard error") {
    auto m = ProbabilityMeasure(field3(), rats({"1", "0", "0"}));
    CHECK_THROWS_AS(m.condition(m.space().singleton(1)), DomainError);
}

TEST_CASE("is_reduction accepts conditioning on an almost sure event") {
    auto m = ProbabilityMeasure(field3(), rats({"1/2", "1/2", "0"}));
    std::vector<std::string> e{"s1", "s2"};
    auto sub = m.condition(m.space().event_of(e));
    CHECK(is_reduction(sub, m).is_reduction);
}

TEST_CASE("is_reduction rejects conditioning on a half-probability event") {
    auto m = half_quarter_quarter();
    std::vector<std::string> e{"s2", "s3"};
    auto sub = m.condition(m.space().event_of(e));
    auto check = is_reduction(sub, m);
    CHECK(!check.is_reduction);
    REQUIRE(check.witness_event);
    // Scaling doubles the retained probabilities.
    CHECK(check.sub_prob == 2 * check.full_prob);
}

TEST_CASE("is_reduction is reflexive") {
    auto m = half_quarter_quarter();
    CHECK(is_reduction(m, m).is_reduction);
}

TEST_CASE("theorem 1 clauses agree on both sides of the boundary") {
    auto m = ProbabilityMeasure(field3(), rats({"1/2", "1/2", "0"}));
    std::vector<std::string> sure{"s1", "s2"};
    auto r = theorem1_oracle(m, m.space().event_of(sure));
    CHECK(r.conditioning_is_reduction);
    CHECK(r.s0_almost_sure);
    CHECK(r.complement_insignificant);
    CHECK(r.consistent());

    auto m2 = ProbabilityMeasure(field3(), rats({"3/4", "1/8", "1/8"}));
    auto r2 = theorem1_oracle(m2, m2.space().singleton(0));
    CHECK(!r2.conditioning_is_reduction);
    CHECK(!r2.s0_almost_sure);
    CHECK(!r2.complement_insignificant);
    CHECK(r2.consistent());

    auto r3 = theorem1_oracle(m2, m2.space().full_event());
    CHECK(r3.consistent());
    CHECK(r3.s0_almost_sure);
}

TEST_CASE("finite additivity and monotonicity on random exact measures") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back("o" + std::to_string(i));
        auto field = discrete_field(OutcomeSpace(labels));

        std::vector<Rational> weights;
        std::uint64_t total = 0;
        std::vector<std::uint64_t> raw(n);
        for (auto& x : raw) {
            x = rng() % 10;
            total += x;
        }
        if (total == 0) raw[0] = total = 1;
        for (auto x : raw) weights.emplace_back(x, total);
        ProbabilityMeasure m(field, weights);

        auto events = m.field().enumerate_events();
        for (EventSet a : events) {
            for (EventSet b : events) {
                if (!a.intersects(b))
                    CHECK(m.prob(a | b) == m.prob(a) + m.prob(b));
                if (a.subset_of(b)) CHECK(m.prob(a) <= m.prob(b));
            }
        }
    }
}
