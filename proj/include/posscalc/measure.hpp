#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posscalc/event_algebra.hpp"
#include "posscalc/rational.hpp"

namespace posscalc {

// Probability class of an event under a measure. Comparisons with 0 and 1
// are exact; the zero-probability boundary is the whole point.
struct Significance {
    Rational probability;

    bool insignificant() const { return probability == 0; }
    bool significant() const { return probability > 0; }
    bool almost_sure() const { return probability == 1; }
    std::string describe() const;
};

// A probability measure on a finite sigma-field, stored as one exact
// weight per atom. Event probability is the sum over contained atoms, so
// additivity holds by construction; the constructor enforces
// Non-negativity and Norming.
class ProbabilityMeasure {
public:
    ProbabilityMeasure(SigmaField field, std::vector<Rational> atom_weights);

    const SigmaField& field() const { return field_; }
    const OutcomeSpace& space() const { return field_.space(); }
    const std::vector<Rational>& atom_weights() const { return weights_; }

    // Throws DomainError when e is not in the field.
    Rational prob(EventSet e) const;
    Significance classify(EventSet e) const;

    // Union of the significant atoms.
    EventSet support() const;

    // Conditional measure on the sub-field over s0: the new space keeps the
    // outcomes of s0 in declaration order, atoms inside s0 carry over, and
    // weights are rescaled by 1/P(s0). Throws DomainError when s0 is not
    // measurable or is insignificant.
    ProbabilityMeasure condition(EventSet s0) const;

private:
    SigmaField field_;
    std::vector<Rational> weights_;
};

struct AxiomViolation {
    std::string axiom;    // "Non-negativity" or "Norming"
    std::string witness;  // atom or value that breaks it
};

struct MeasureValidation {
    std::optional<ProbabilityMeasure> measure;  // set iff no violations
    std::vector<AxiomViolation> violations;

    bool valid() const { return violations.empty(); }
};

// Checks the probability axioms and returns either the measure or a report
// naming every violated axiom with a witness. Throws DomainError on a
// weight-count mismatch.
MeasureValidation validate_measure(const SigmaField& field,
                                   std::vector<Rational> atom_weights);

struct ReductionCheck {
    bool is_reduction = false;
    // On failure: which condition broke and, for a probability mismatch,
    // the first failing event with both values.
    std::string failure;
    std::optional<std::vector<std::string>> witness_event;
    Rational sub_prob;
    Rational full_prob;
};

// Exhaustive check of the reduction conditions: sub's outcomes lie in
// full's space, every event of sub's field is an event of full's field,
// and probabilities agree on all of them.
ReductionCheck is_reduction(
    const ProbabilityMeasure& sub, const ProbabilityMeasure& full,
    std::size_t max_atoms = SigmaField::kDefaultEnumerationCap);

struct Theorem1Report {
    bool conditioning_is_reduction = false;
    bool s0_almost_sure = false;
    bool complement_insignificant = false;
    ReductionCheck reduction_details;

    bool consistent() const {
        return conditioning_is_reduction == s0_almost_sure &&
               s0_almost_sure == complement_insignificant;
    }
};

// Evaluates the three equivalent clauses for a significant s0:
// condition(full, s0) reduces full  <=>  P(s0) = 1  <=>  P(S - s0) = 0.
Theorem1Report theorem1_oracle(
    const ProbabilityMeasure& full, EventSet s0,
    std::size_t max_atoms = SigmaField::kDefaultEnumerationCap);

}  // namespace posscalc
