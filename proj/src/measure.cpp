#include "posscalc/measure.hpp"

#include <algorithm>

namespace posscalc {

std::string Significance::describe() const {
    if (insignificant()) return "insignificant";
    if (almost_sure()) return "significant, almost sure";
    return "significant, not almost sure";
}

namespace {

std::vector<AxiomViolation> check_axioms(const SigmaField& field,
                                         const std::vector<Rational>& weights) {
    if (weights.size() != field.atom_count())
        throw DomainError("expected " + std::to_string(field.atom_count()) +
                          " atom weights, got " +
                          std::to_string(weights.size()));
    std::vector<AxiomViolation> violations;
    Rational sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) {
            violations.push_back(
                {"Non-negativity",
                 "atom " + format_event(field.space(), field.atoms()[i]) +
                     " has weight " + to_string(weights[i])});
        }
        sum += weights[i];
    }
    if (sum != 1) {
        violations.push_back(
            {"Norming", "weights sum to " + to_string(sum) + ", expected 1"});
    }
    return violations;
}

}  // namespace

ProbabilityMeasure::ProbabilityMeasure(SigmaField field,
                                       std::vector<Rational> atom_weights)
    : field_(std::move(field)), weights_(std::move(atom_weights)) {
    auto violations = check_axioms(field_, weights_);
    if (!violations.empty()) {
        std::string msg = "invalid probability measure:";
        for (const auto& v : violations)
            msg += " [" + v.axiom + ": " + v.witness + "]";
        throw DomainError(msg);
    }
}

MeasureValidation validate_measure(const SigmaField& field,
                                   std::vector<Rational> atom_weights) {
    MeasureValidation result;
    result.violations = check_axioms(field, atom_weights);
    if (result.violations.empty())
        result.measure.emplace(field, std::move(atom_weights));
    return result;
}

Rational ProbabilityMeasure::prob(EventSet e) const {
    if (!field_.contains(e))
        throw DomainError("event " + format_event(space(), e) +
                          " is not measurable in this field");
    Rational sum = 0;
    for (std::size_t i = 0; i < field_.atom_count(); ++i)
        if (field_.atoms()[i].subset_of(e)) sum += weights_[i];
    return sum;
}

Significance ProbabilityMeasure::classify(EventSet e) const {
    return Significance{prob(e)};
}

EventSet ProbabilityMeasure::support() const {
    EventSet s;
    for (std::size_t i = 0; i < field_.atom_count(); ++i)
        if (weights_[i] > 0) s = s | field_.atoms()[i];
    return s;
}

ProbabilityMeasure ProbabilityMeasure::condition(EventSet s0) const {
    Rational p0 = prob(s0);  // also checks measurability
    if (p0 == 0)
        throw DomainError("cannot condition on insignificant event " +
                          format_event(space(), s0));

    std::vector<std::string> sub_labels;
    std::vector<std::size_t> old_index;  // new outcome index -> old
    for (std::size_t i = 0; i < space().size(); ++i) {
        if (s0.contains(i)) {
            old_index.push_back(i);
            sub_labels.push_back(space().label(i));
        }
    }
    OutcomeSpace sub_space(std::move(sub_labels));

    auto remap = [&](EventSet e) {
        EventSet out;
        for (std::size_t j = 0; j < old_index.size(); ++j)
            if (e.contains(old_index[j])) out = out | sub_space.singleton(j);
        return out;
    };

    std::vector<EventSet> sub_atoms;
    std::vector<Rational> sub_weights;
    for (std::size_t i = 0; i < field_.atom_count(); ++i) {
        if (field_.atoms()[i].subset_of(s0)) {
            sub_atoms.push_back(remap(field_.atoms()[i]));
            sub_weights.push_back(weights_[i] / p0);
        }
    }
    return ProbabilityMeasure(SigmaField(std::move(sub_space), std::move(sub_atoms)),
                              std::move(sub_weights));
}

ReductionCheck is_reduction(const ProbabilityMeasure& sub,
                            const ProbabilityMeasure& full,
                            std::size_t max_atoms) {
    ReductionCheck r;
    const auto& sub_space = sub.space();
    const auto& full_space = full.space();

    // S0 subset of S, with an index map for event translation.
    std::vector<std::size_t> to_full(sub_space.size());
    for (std::size_t j = 0; j < sub_space.size(); ++j) {
        auto idx = full_space.index_of(sub_space.label(j));
        if (!idx) {
            r.failure = "outcome '" + sub_space.label(j) +
                        "' is not in the full space";
            return r;
        }
        to_full[j] = *idx;
    }
    auto embed = [&](EventSet e) {
        EventSet out;
        for (std::size_t j = 0; j < sub_space.size(); ++j)
            if (e.contains(j)) out = out | full_space.singleton(to_full[j]);
        return out;
    };

    for (EventSet e : sub.field().enumerate_events(max_atoms)) {
        EventSet in_full = embed(e);
        if (!full.field().contains(in_full)) {
            r.failure = "event " + format_event(sub_space, e) +
                        " is not measurable in the full field";
            r.witness_event = e.labels(sub_space);
            return r;
        }
        Rational ps = sub.prob(e);
        Rational pf = full.prob(in_full);
        if (ps != pf) {
            r.failure = "probability mismatch";
            r.witness_event = e.labels(sub_space);
            r.sub_prob = ps;
            r.full_prob = pf;
            return r;
        }
    }
    r.is_reduction = true;
    return r;
}

Theorem1Report theorem1_oracle(const ProbabilityMeasure& full, EventSet s0,
                               std::size_t max_atoms) {
    Theorem1Report report;
    ProbabilityMeasure conditioned = full.condition(s0);
    report.reduction_details = is_reduction(conditioned, full, max_atoms);
    report.conditioning_is_reduction = report.reduction_details.is_reduction;
    report.s0_almost_sure = full.prob(s0) == 1;
    report.complement_insignificant =
        full.prob(s0.complement_in(full.space())) == 0;
    return report;
}

}  // namespace posscalc
