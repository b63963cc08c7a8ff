#include "posscalc/beliefs.hpp"

namespace posscalc {

BeliefProp opposite(BeliefProp p) {
    switch (p) {
        case BeliefProp::possible: return BeliefProp::impossible;
        case BeliefProp::impossible: return BeliefProp::possible;
        case BeliefProp::prob_zero: return BeliefProp::prob_pos;
        case BeliefProp::prob_pos: return BeliefProp::prob_zero;
        case BeliefProp::theta_zero: return BeliefProp::theta_pos;
        case BeliefProp::theta_pos: return BeliefProp::theta_zero;
    }
    return p;
}

std::string_view belief_name(BeliefProp p) {
    switch (p) {
        case BeliefProp::possible: return "possible(a)";
        case BeliefProp::impossible: return "impossible(a)";
        case BeliefProp::prob_zero: return "P(x_i=a)=0";
        case BeliefProp::prob_pos: return "P(x_i=a)>0";
        case BeliefProp::theta_zero: return "Pr(theta_a=0)=1";
        case BeliefProp::theta_pos: return "Pr(theta_a>0)>0";
    }
    return "";
}

std::string_view belief_token(BeliefProp p) {
    switch (p) {
        case BeliefProp::possible: return "possible(a)";
        case BeliefProp::impossible: return "impossible(a)";
        case BeliefProp::prob_zero: return "prob_zero(a)";
        case BeliefProp::prob_pos: return "prob_pos(a)";
        case BeliefProp::theta_zero: return "theta_zero(a)";
        case BeliefProp::theta_pos: return "theta_pos(a)";
    }
    return "";
}

std::optional<BeliefProp> parse_belief(std::string_view token) {
    if (token == "possible(a)") return BeliefProp::possible;
    if (token == "impossible(a)") return BeliefProp::impossible;
    if (token == "prob_zero(a)") return BeliefProp::prob_zero;
    if (token == "prob_pos(a)") return BeliefProp::prob_pos;
    if (token == "theta_zero(a)") return BeliefProp::theta_zero;
    if (token == "theta_pos(a)") return BeliefProp::theta_pos;
    return std::nullopt;
}

namespace {

struct Rule {
    const char* name;
    BeliefProp from;
    BeliefProp to;
    bool needs_exchangeable;
};

// R2 and R3 are biconditionals, listed as two directed rules each.
constexpr Rule kRules[] = {
    {"R1", BeliefProp::impossible, BeliefProp::prob_zero, false},
    {"R2", BeliefProp::theta_zero, BeliefProp::prob_zero, true},
    {"R2", BeliefProp::prob_zero, BeliefProp::theta_zero, true},
    {"R3", BeliefProp::theta_pos, BeliefProp::prob_pos, true},
    {"R3", BeliefProp::prob_pos, BeliefProp::theta_pos, true},
    {"R4", BeliefProp::prob_zero, BeliefProp::impossible, true},
};

}  // namespace

BeliefClosure belief_closure(const BeliefState& start) {
    BeliefClosure out;
    out.state = start;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& rule : kRules) {
            if (rule.needs_exchangeable && !out.state.exchangeable) continue;
            if (!out.state.has(rule.from) || out.state.has(rule.to)) continue;
            out.state.props.insert(rule.to);
            out.trace.push_back(std::string(rule.name) + ": " +
                                std::string(belief_name(rule.from)) + " => " +
                                std::string(belief_name(rule.to)));
            changed = true;
        }
    }

    for (BeliefProp p : out.state.props) {
        if (out.state.has(opposite(p))) {
            out.contradiction = true;
            break;
        }
    }
    return out;
}

}  // namespace posscalc
