#include "posscalc/possibility.hpp"

namespace posscalc {

std::string ModalClass::describe() const {
    std::string out = possible ? "possible" : "impossible";
    out += certain ? ", certain" : ", uncertain";
    return out;
}

PossibilitySpace::PossibilitySpace(OutcomeSpace space, EventSet possible)
    : space_(std::move(space)), possible_(possible) {
    if (!possible_.subset_of(space_.full_event()))
        throw DomainError("possibility space must be a subset of the outcomes");
}

void PossibilitySpace::check_event(EventSet e) const {
    if (!e.subset_of(space_.full_event()))
        throw DomainError("event is not a subset of the outcome space");
}

int PossibilitySpace::possibility(EventSet e) const {
    check_event(e);
    return e.intersects(possible_) ? 1 : 0;
}

ModalClass PossibilitySpace::classify_modal(EventSet e) const {
    check_event(e);
    ModalClass c;
    c.possible = possibility(e) == 1;
    c.certain = possibility(e.complement_in(space_)) == 0;
    return c;
}

int PossibilitySpace::conditional_possibility(EventSet e, EventSet c) const {
    check_event(e);
    check_event(c);
    return (e & possible_ & c).empty() ? 0 : 1;
}

std::optional<HackingWitness> hacking_mismatch(const PossibilitySpace& w,
                                               const ProbabilityMeasure& measure) {
    EventSet possible = w.possible_set();
    std::uint64_t wb = possible.bits();
    // Enumerate non-empty sub-masks of W in increasing order.
    for (std::uint64_t eb = 1; eb <= wb; ++eb) {
        if ((eb & wb) != eb) continue;
        EventSet e = EventSet::from_bits(eb);
        if (!measure.field().contains(e)) continue;
        Rational pe = measure.prob(e);
        if (pe == 0) continue;
        std::uint64_t rest = wb & ~eb;
        for (std::uint64_t cb = 1; cb <= rest; ++cb) {
            if ((cb & rest) != cb) continue;
            EventSet c = EventSet::from_bits(cb);
            if (!measure.field().contains(c)) continue;
            // E, C disjoint subsets of W, so E ∩ W ∩ C is empty by choice.
            return HackingWitness{e, c, pe};
        }
    }
    return std::nullopt;
}

}  // namespace posscalc
