#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "posscalc/measure.hpp"
#include "posscalc/possibility.hpp"

namespace posscalc {

// How the correspondence axiom was decided: through P(W) = 1 when W is
// measurable, or by quantifying over every enumerated event otherwise.
enum class CorrespondenceForm { measurable_w, universal };

struct CorrespondenceReport {
    bool holds = false;
    CorrespondenceForm form_used = CorrespondenceForm::universal;
    // Impossible-but-significant events; capped for readability.
    std::vector<EventSet> witnesses;
    std::size_t total_witnesses = 0;
    std::optional<Rational> prob_w;  // set when the measurable-W form applies

    static constexpr std::size_t kWitnessCap = 10;
};

// Decides whether every impossible event is insignificant. Requires the
// possibility space and measure to share the same outcome space.
CorrespondenceReport check_correspondence(
    const PossibilitySpace& w, const ProbabilityMeasure& measure,
    std::size_t max_atoms = SigmaField::kDefaultEnumerationCap);

struct Theorem3Report {
    bool applicable = false;  // correspondence axiom holds
    bool certain_implies_almost_sure = false;
    bool significant_implies_possible = false;
    std::optional<EventSet> witness_certain_not_almost_sure;
    std::optional<EventSet> witness_significant_not_possible;

    bool pass() const {
        return applicable && certain_implies_almost_sure &&
               significant_implies_possible;
    }
};

// Exhaustively verifies both clauses over the enumerated events. When the
// axiom fails the report is marked not applicable and no clause is claimed.
Theorem3Report theorem3_oracle(
    const PossibilitySpace& w, const ProbabilityMeasure& measure,
    std::size_t max_atoms = SigmaField::kDefaultEnumerationCap);

// Cells of a partition grouped by probability into the intervals
// (1/(k+1), 1/k]. Additivity forces each bucket k to hold at most k cells,
// which is what caps the number of significant cells at any scale.
struct BucketDecomposition {
    std::map<std::uint64_t, std::vector<EventSet>> buckets;
    std::vector<EventSet> zero_cells;
};

// Bins every cell of the partition. Throws DomainError when the cells are
// not a measurable partition of the space, or (which additivity rules
// out) a bucket exceeds its bound.
BucketDecomposition bucket_decomposition(const ProbabilityMeasure& measure,
                                         std::span<const EventSet> partition);

struct Refinement {
    ProbabilityMeasure measure;      // conditioned on the significant support
    PossibilitySpace possibility;    // restricted to the refined space
    EventSet support_in_original;    // the conditioning event S0
};

// The constructive refinement: condition on the union of significant
// atoms. In the result every non-empty event is possible and significant,
// and the only almost-sure event is the whole refined space. Requires the
// axiom to hold and W to be a union of atoms; refuses otherwise.
Refinement refine_to_correspondence(
    const PossibilitySpace& w, const ProbabilityMeasure& measure,
    std::size_t max_atoms = SigmaField::kDefaultEnumerationCap);

struct Desideratum1Report {
    bool pass = false;
    std::size_t events_checked = 0;
    std::optional<EventSet> witness;  // almost-sure superset of W that fails
};

// Checks that conditioning on any almost-sure event containing W is a
// reduction, i.e. impossible events can be dropped from the sample space
// without changing any retained probability.
Desideratum1Report desideratum1_demo(
    const PossibilitySpace& w, const ProbabilityMeasure& measure,
    std::size_t max_atoms = SigmaField::kDefaultEnumerationCap);

}  // namespace posscalc
