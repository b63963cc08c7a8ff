#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace posscalc {

// Exact rational arithmetic for all probability values. Axiom checks and
// theorem oracles compare against 0 and 1 exactly; floating point appears
// only in simulation estimates.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Parses "a/b" or "a" with optional sign. Returns nullopt on malformed
// input or zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s,
                        boost::multiprecision::cpp_int& out) -> bool {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') i = 1;
        if (i == s.size()) return false;
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') return false;
        out = boost::multiprecision::cpp_int(std::string(s));
        return true;
    };

    boost::multiprecision::cpp_int num, den = 1;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_int(text, num)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    return Rational(num, den);
}

}  // namespace posscalc
