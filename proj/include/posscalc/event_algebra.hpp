#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posscalc {

// Raised on precondition breaches: unknown labels, non-measurable events,
// conditioning on a null event, enumeration caps, malformed partitions.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutcomeSpace;

// A subset of an outcome space, stored as a bitmask over outcome indices.
// Value type with set semantics; complement needs the space, everything
// else is mask arithmetic.
class EventSet {
public:
    EventSet() = default;
    static EventSet from_bits(std::uint64_t bits) { return EventSet(bits); }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    std::size_t count() const;
    bool contains(std::size_t outcome_index) const {
        return (bits_ >> outcome_index) & 1u;
    }
    bool subset_of(EventSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    bool intersects(EventSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    EventSet complement_in(const OutcomeSpace& space) const;
    std::vector<std::string> labels(const OutcomeSpace& space) const;
    std::vector<std::size_t> indices() const;

    friend EventSet operator|(EventSet a, EventSet b) {
        return EventSet(a.bits_ | b.bits_);
    }
    friend EventSet operator&(EventSet a, EventSet b) {
        return EventSet(a.bits_ & b.bits_);
    }
    friend EventSet operator-(EventSet a, EventSet b) {
        return EventSet(a.bits_ & ~b.bits_);
    }
    friend bool operator==(EventSet a, EventSet b) = default;
    friend bool operator<(EventSet a, EventSet b) { return a.bits_ < b.bits_; }

private:
    explicit EventSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

// The sample space: an ordered list of distinct outcome labels. The
// declaration order is stable and fixes the order of every derived report.
class OutcomeSpace {
public:
    static constexpr std::size_t kMaxOutcomes = 64;

    explicit OutcomeSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    EventSet empty_event() const { return {}; }
    EventSet full_event() const;
    EventSet singleton(std::size_t outcome_index) const;
    // Throws DomainError naming the first unknown label.
    EventSet event_of(std::span<const std::string> labels) const;

    friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> labels_;
};

// A sigma-field on a finite space, represented by its atoms: the finest
// partition whose unions (plus the empty set) form the field. The atom
// list uniquely determines the field and keeps membership and enumeration
// linear in the number of atoms.
class SigmaField {
public:
    static constexpr std::size_t kDefaultEnumerationCap = 20;

    SigmaField(OutcomeSpace space, std::vector<EventSet> atoms);

    const OutcomeSpace& space() const { return space_; }
    const std::vector<EventSet>& atoms() const { return atoms_; }
    std::size_t atom_count() const { return atoms_.size(); }

    // True iff e is a union of atoms (the empty set counts).
    bool contains(EventSet e) const;

    // All 2^(#atoms) unions of atoms, ordered by atom-subset rank.
    // Throws DomainError when the atom count exceeds the cap.
    std::vector<EventSet> enumerate_events(
        std::size_t max_atoms = kDefaultEnumerationCap) const;

    friend bool operator==(const SigmaField& a, const SigmaField& b) {
        return a.space_ == b.space_ && a.atoms_ == b.atoms_;
    }

private:
    OutcomeSpace space_;
    std::vector<EventSet> atoms_;
};

// Coarsest field whose induced family contains every generator. Atoms are
// the classes of outcomes that belong to exactly the same generators,
// ordered by their smallest outcome index.
SigmaField generate_field(const OutcomeSpace& space,
                          std::span<const EventSet> generators);

// Label-list convenience: resolves each generator through event_of, so an
// unknown label raises a DomainError naming it.
SigmaField generate_field(
    const OutcomeSpace& space,
    const std::vector<std::vector<std::string>>& generator_labels);

// Discrete field: every singleton is an atom.
SigmaField discrete_field(const OutcomeSpace& space);

std::string format_event(const OutcomeSpace& space, EventSet e);

}  // namespace posscalc
