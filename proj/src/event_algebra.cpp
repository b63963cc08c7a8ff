#include "posscalc/event_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace posscalc {

std::size_t EventSet::count() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

EventSet EventSet::complement_in(const OutcomeSpace& space) const {
    return space.full_event() - *this;
}

std::vector<std::string> EventSet::labels(const OutcomeSpace& space) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (contains(i)) out.push_back(space.label(i));
    return out;
}

std::vector<std::size_t> EventSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    if (labels_.empty())
        throw DomainError("outcome space must contain at least one outcome");
    if (labels_.size() > kMaxOutcomes)
        throw DomainError("outcome space exceeds the supported maximum of 64 outcomes");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second)
            throw DomainError("duplicate outcome label '" + l + "'");
    }
}

std::optional<std::size_t> OutcomeSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

EventSet OutcomeSpace::full_event() const {
    if (labels_.size() == 64) return EventSet::from_bits(~std::uint64_t{0});
    return EventSet::from_bits((std::uint64_t{1} << labels_.size()) - 1);
}

EventSet OutcomeSpace::singleton(std::size_t outcome_index) const {
    if (outcome_index >= labels_.size())
        throw DomainError("outcome index out of range");
    return EventSet::from_bits(std::uint64_t{1} << outcome_index);
}

EventSet OutcomeSpace::event_of(std::span<const std::string> labels) const {
    EventSet e;
    for (const auto& l : labels) {
        auto idx = index_of(l);
        if (!idx)
            throw DomainError("unknown outcome label '" + l + "'");
        e = e | singleton(*idx);
    }
    return e;
}

SigmaField::SigmaField(OutcomeSpace space, std::vector<EventSet> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms)) {
    EventSet covered;
    for (const auto& a : atoms_) {
        if (a.empty()) throw DomainError("sigma-field atom must be non-empty");
        if (a.intersects(covered))
            throw DomainError("sigma-field atoms must be pairwise disjoint");
        covered = covered | a;
    }
    if (covered != space_.full_event())
        throw DomainError("sigma-field atoms must cover the whole space");
}

bool SigmaField::contains(EventSet e) const {
    if (!e.subset_of(space_.full_event())) return false;
    // e is measurable iff it never splits an atom.
    for (const auto& a : atoms_) {
        EventSet overlap = a & e;
        if (!overlap.empty() && overlap != a) return false;
    }
    return true;
}

std::vector<EventSet> SigmaField::enumerate_events(std::size_t max_atoms) const {
    if (atoms_.size() > max_atoms)
        throw DomainError("event enumeration requires at most " +
                          std::to_string(max_atoms) + " atoms, field has " +
                          std::to_string(atoms_.size()));
    std::vector<EventSet> events;
    events.reserve(std::size_t{1} << atoms_.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms_.size());
         ++mask) {
        EventSet e;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if ((mask >> i) & 1u) e = e | atoms_[i];
        events.push_back(e);
    }
    return events;
}

SigmaField generate_field(const OutcomeSpace& space,
                          std::span<const EventSet> generators) {
    for (const auto& g : generators) {
        if (!g.subset_of(space.full_event()))
            throw DomainError("generator is not a subset of the outcome space");
    }
    // Atoms are classes of outcomes with identical generator membership.
    std::map<std::vector<bool>, EventSet> classes;
    for (std::size_t i = 0; i < space.size(); ++i) {
        std::vector<bool> signature;
        signature.reserve(generators.size());
        for (const auto& g : generators) signature.push_back(g.contains(i));
        auto& atom = classes[signature];
        atom = atom | space.singleton(i);
    }
    std::vector<EventSet> atoms;
    for (auto& [sig, atom] : classes) atoms.push_back(atom);
    // Disjoint atoms have distinct lowest members; order by declaration order
    // of that member.
    std::sort(atoms.begin(), atoms.end(), [](EventSet a, EventSet b) {
        return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
    });
    return SigmaField(space, std::move(atoms));
}

SigmaField generate_field(
    const OutcomeSpace& space,
    const std::vector<std::vector<std::string>>& generator_labels) {
    std::vector<EventSet> generators;
    generators.reserve(generator_labels.size());
    for (const auto& labels : generator_labels)
        generators.push_back(space.event_of(labels));
    return generate_field(space, generators);
}

SigmaField discrete_field(const OutcomeSpace& space) {
    std::vector<EventSet> atoms;
    atoms.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        atoms.push_back(space.singleton(i));
    return SigmaField(space, std::move(atoms));
}

std::string format_event(const OutcomeSpace& space, EventSet e) {
    if (e.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (!e.contains(i)) continue;
        if (!first) out += " ";
        out += space.label(i);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace posscalc
