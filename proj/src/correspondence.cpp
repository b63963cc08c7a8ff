#include "posscalc/correspondence.hpp"

namespace posscalc {

namespace {

void require_same_space(const PossibilitySpace& w,
                        const ProbabilityMeasure& measure) {
    if (!(w.space() == measure.space()))
        throw DomainError(
            "possibility space and measure must share the same outcome space");
}

}  // namespace

CorrespondenceReport check_correspondence(const PossibilitySpace& w,
                                          const ProbabilityMeasure& measure,
                                          std::size_t max_atoms) {
    require_same_space(w, measure);
    CorrespondenceReport report;

    EventSet possible = w.possible_set();
    bool w_measurable = measure.field().contains(possible);
    if (w_measurable) {
        report.form_used = CorrespondenceForm::measurable_w;
        report.prob_w = measure.prob(possible);
        report.holds = *report.prob_w == 1;
    }

    if (w_measurable && report.holds) return report;

    // Witness scan over all events; also decides the universal form.
    for (EventSet e : measure.field().enumerate_events(max_atoms)) {
        if (w.possibility(e) == 0 && measure.prob(e) > 0) {
            ++report.total_witnesses;
            if (report.witnesses.size() < CorrespondenceReport::kWitnessCap)
                report.witnesses.push_back(e);
        }
    }
    if (!w_measurable) report.holds = report.total_witnesses == 0;
    return report;
}

Theorem3Report theorem3_oracle(const PossibilitySpace& w,
                               const ProbabilityMeasure& measure,
                               std::size_t max_atoms) {
    Theorem3Report report;
    auto axiom = check_correspondence(w, measure, max_atoms);
    report.applicable = axiom.holds;
    if (!report.applicable) return report;

    report.certain_implies_almost_sure = true;
    report.significant_implies_possible = true;
    for (EventSet e : measure.field().enumerate_events(max_atoms)) {
        auto modal = w.classify_modal(e);
        auto sig = measure.classify(e);
        if (modal.certain && !sig.almost_sure() &&
            report.certain_implies_almost_sure) {
            report.certain_implies_almost_sure = false;
            report.witness_certain_not_almost_sure = e;
        }
        if (sig.significant() && !modal.possible &&
            report.significant_implies_possible) {
            report.significant_implies_possible = false;
            report.witness_significant_not_possible = e;
        }
    }
    return report;
}

BucketDecomposition bucket_decomposition(const ProbabilityMeasure& measure,
                                         std::span<const EventSet> partition) {
    EventSet covered;
    for (EventSet cell : partition) {
        if (cell.empty())
            throw DomainError("partition cells must be non-empty");
        if (cell.intersects(covered))
            throw DomainError("partition cells must be pairwise disjoint");
        if (!measure.field().contains(cell))
            throw DomainError("partition cell " +
                              format_event(measure.space(), cell) +
                              " is not measurable");
        covered = covered | cell;
    }
    if (covered != measure.space().full_event())
        throw DomainError("partition cells must cover the whole space");

    BucketDecomposition out;
    for (EventSet cell : partition) {
        Rational p = measure.prob(cell);
        if (p == 0) {
            out.zero_cells.push_back(cell);
            continue;
        }
        // k = floor(1/p) places p in (1/(k+1), 1/k].
        auto k = static_cast<std::uint64_t>(
            boost::multiprecision::cpp_int(denominator(p) / numerator(p)));
        out.buckets[k].push_back(cell);
    }
    for (const auto& [k, cells] : out.buckets) {
        if (cells.size() > k)
            throw DomainError(
                "bucket " + std::to_string(k) + " holds " +
                std::to_string(cells.size()) +
                " cells, contradicting Norming and additivity");
    }
    return out;
}

Refinement refine_to_correspondence(const PossibilitySpace& w,
                                    const ProbabilityMeasure& measure,
                                    std::size_t max_atoms) {
    require_same_space(w, measure);
    if (!measure.field().contains(w.possible_set()))
        throw DomainError(
            "refinement requires the possibility space to be a union of atoms");
    auto axiom = check_correspondence(w, measure, max_atoms);
    if (!axiom.holds) {
        std::string msg =
            "correspondence axiom does not hold; impossible-but-significant "
            "events:";
        for (EventSet e : axiom.witnesses)
            msg += " " + format_event(measure.space(), e);
        throw DomainError(msg);
    }

    EventSet s0 = measure.support();
    ProbabilityMeasure refined = measure.condition(s0);

    // Remap W ∩ S0 into the refined space. The axiom puts all weight
    // inside W, so this is the whole refined space.
    EventSet retained = w.possible_set() & s0;
    EventSet refined_possible;
    for (std::size_t j = 0; j < refined.space().size(); ++j) {
        auto idx = measure.space().index_of(refined.space().label(j));
        if (idx && retained.contains(*idx))
            refined_possible = refined_possible | refined.space().singleton(j);
    }
    PossibilitySpace refined_w(refined.space(), refined_possible);
    return Refinement{std::move(refined), std::move(refined_w), s0};
}

Desideratum1Report desideratum1_demo(const PossibilitySpace& w,
                                     const ProbabilityMeasure& measure,
                                     std::size_t max_atoms) {
    require_same_space(w, measure);
    Desideratum1Report report;
    report.pass = true;
    for (EventSet e : measure.field().enumerate_events(max_atoms)) {
        if (!w.possible_set().subset_of(e)) continue;
        if (measure.prob(e) != 1) continue;
        ++report.events_checked;
        auto check = is_reduction(measure.condition(e), measure, max_atoms);
        if (!check.is_reduction && report.pass) {
            report.pass = false;
            report.witness = e;
        }
    }
    return report;
}

}  // namespace posscalc
