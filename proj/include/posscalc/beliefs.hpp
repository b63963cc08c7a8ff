#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace posscalc {

// Atomic beliefs about a fixed category a of the repeated-trials model.
// Adjacent pairs (possible/impossible, occurrence probability zero /
// positive, long-run proportion almost surely zero / possibly positive)
// are mutual opposites.
enum class BeliefProp {
    possible,     // outcome a is possible
    impossible,   // outcome a is impossible
    prob_zero,    // P(x_i = a) = 0
    prob_pos,     // P(x_i = a) > 0
    theta_zero,   // Pr(theta_a = 0) = 1
    theta_pos,    // Pr(theta_a > 0) > 0
};

constexpr std::size_t kBeliefPropCount = 6;

BeliefProp opposite(BeliefProp p);
std::string_view belief_name(BeliefProp p);   // display form, e.g. "P(x_i=a)=0"
std::string_view belief_token(BeliefProp p);  // grammar form, e.g. "prob_zero(a)"
std::optional<BeliefProp> parse_belief(std::string_view token);

struct BeliefState {
    std::set<BeliefProp> props;
    bool exchangeable = false;

    bool has(BeliefProp p) const { return props.count(p) > 0; }
};

struct BeliefClosure {
    BeliefState state;
    bool contradiction = false;
    // One line per rule application, in firing order.
    std::vector<std::string> trace;
};

// Fixed-point closure under the implication rules:
//   R1            impossible(a)      =>  P(x_i=a)=0
//   R2 (exch.)    Pr(theta_a=0)=1   <=>  P(x_i=a)=0
//   R3 (exch.)    Pr(theta_a>0)>0   <=>  P(x_i=a)>0
//   R4 (exch.)    P(x_i=a)=0         =>  impossible(a)
// R2-R4 fire only when the state is marked exchangeable. A contradiction
// is flagged when a proposition and its opposite are both present.
BeliefClosure belief_closure(const BeliefState& start);

}  // namespace posscalc
