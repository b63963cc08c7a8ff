#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posscalc/beliefs.hpp"
#include "posscalc/rational.hpp"

namespace posscalc {

// Parsed form of the line-oriented spec format:
//
//   # comment
//   outcomes: s1 s2 s3
//   event Name = s1 s2
//   measure: s1=1/2 s2=1/4 s3=1/4
//   possible: s1 s2
//   multinomial: m=2 theta=1/2,1/2 k=1000 seed=42
//   beliefs: exchangeable possible(a)
//
// One outcomes line, at most one measure/possible/multinomial/beliefs
// block, any number of named events.

struct NamedEvent {
    std::string name;
    std::vector<std::string> members;
};

struct MeasureBlock {
    // Weight per outcome label, in declaration order of the block.
    std::vector<std::pair<std::string, Rational>> weights;
};

struct MultinomialBlock {
    unsigned m = 0;
    std::vector<Rational> theta;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
};

struct BeliefsBlock {
    BeliefState state;
};

struct SpecFile {
    std::vector<std::string> outcomes;
    std::vector<NamedEvent> events;
    std::optional<MeasureBlock> measure;
    std::optional<std::vector<std::string>> possible;
    std::optional<MultinomialBlock> multinomial;
    std::optional<BeliefsBlock> beliefs;

    const NamedEvent* find_event(std::string_view name) const;
};

struct Diagnostic {
    enum class Severity { error, warning };
    Severity severity = Severity::error;
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
    std::string message;
    std::string token;

    std::string format() const;
};

struct ParseResult {
    SpecFile file;
    std::vector<Diagnostic> diagnostics;

    bool ok() const;  // no error-severity diagnostics
};

// Total parse: collects every diagnostic instead of stopping at the first
// error. Accepts LF and CRLF; '#' starts a comment.
ParseResult parse_spec(std::string_view text);

// Canonical text form; parse_spec(serialize_spec(f)) is structurally
// identical to f.
std::string serialize_spec(const SpecFile& file);

}  // namespace posscalc
