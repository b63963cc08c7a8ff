#pragma once

#include <optional>
#include <string>

#include "posscalc/event_algebra.hpp"
#include "posscalc/measure.hpp"

namespace posscalc {

// Modal status of an event: possible iff it meets W, certain iff it
// covers W. With W empty every event is vacuously certain.
struct ModalClass {
    bool possible = false;
    bool certain = false;

    bool impossible() const { return !possible; }
    bool uncertain() const { return !certain; }
    std::string describe() const;
};

// The set W of outcomes not known to be false, with the all-or-nothing
// possibility function it induces. W may be any subset of the space,
// including one outside the sigma-field.
class PossibilitySpace {
public:
    PossibilitySpace(OutcomeSpace space, EventSet possible);

    const OutcomeSpace& space() const { return space_; }
    EventSet possible_set() const { return possible_; }
    // Empty W: everything impossible and vacuously certain. Allowed, but
    // callers may want to warn.
    bool degenerate() const { return possible_.empty(); }

    // The indicator that e intersects W.
    int possibility(EventSet e) const;
    ModalClass classify_modal(EventSet e) const;
    // The indicator that e, W and the conditioning event c all intersect.
    int conditional_possibility(EventSet e, EventSet c) const;

private:
    void check_event(EventSet e) const;

    OutcomeSpace space_;
    EventSet possible_;
};

struct HackingWitness {
    EventSet event;        // E: conditionally impossible yet significant
    EventSet conditioning; // C
    Rational prob_event;
};

// Searches for disjoint measurable events E, C inside W with
// conditional possibility of E given C equal to 0 while P(E) > 0. Such a
// pair shows that conditioning the possibility side alone breaks the
// impossible-implies-insignificant link. Search is by increasing event
// mask, so the first witness is deterministic.
std::optional<HackingWitness> hacking_mismatch(const PossibilitySpace& w,
                                               const ProbabilityMeasure& measure);

}  // namespace posscalc
