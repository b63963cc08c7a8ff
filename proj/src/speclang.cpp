#include "posscalc/speclang.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace posscalc {

const NamedEvent* SpecFile::find_event(std::string_view name) const {
    for (const auto& e : events)
        if (e.name == name) return &e;
    return nullptr;
}

std::string Diagnostic::format() const {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    if (!token.empty()) os << " ('" << token << "')";
    return os.str();
}

bool ParseResult::ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const Diagnostic& d) {
                            return d.severity == Diagnostic::Severity::error;
                        });
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

// Splits a line on whitespace, dropping everything from '#' on.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '#')
            ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run() {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            ++line_no;
            parse_line(line_no, text_.substr(pos, end - pos));
            if (end == text_.size()) break;
            pos = end + 1;
        }
        finish(line_no);
        return std::move(result_);
    }

private:
    void error(std::size_t line, std::size_t column, std::string message,
               std::string token = "") {
        result_.diagnostics.push_back({Diagnostic::Severity::error, line,
                                       column, std::move(message),
                                       std::move(token)});
    }
    void warning(std::size_t line, std::size_t column, std::string message,
                 std::string token = "") {
        result_.diagnostics.push_back({Diagnostic::Severity::warning, line,
                                       column, std::move(message),
                                       std::move(token)});
    }

    bool known_outcome(const std::string& label) const {
        const auto& o = result_.file.outcomes;
        return std::find(o.begin(), o.end(), label) != o.end();
    }

    void check_outcome_ref(std::size_t line, const Token& tok,
                           const std::string& label) {
        if (!outcomes_seen_) return;  // already reported the missing header
        if (!known_outcome(label))
            error(line, tok.column, "undeclared outcome label", label);
    }

    void parse_line(std::size_t line, std::string_view raw) {
        auto tokens = tokenize(raw);
        if (tokens.empty()) return;
        const std::string& head = tokens[0].text;

        if (head == "outcomes:")
            parse_outcomes(line, tokens);
        else if (head == "event")
            parse_event(line, tokens);
        else if (head == "measure:")
            parse_measure(line, tokens);
        else if (head == "possible:")
            parse_possible(line, tokens);
        else if (head == "multinomial:")
            parse_multinomial(line, tokens);
        else if (head == "beliefs:")
            parse_beliefs(line, tokens);
        else
            error(line, tokens[0].column, "unrecognized directive", head);
    }

    void parse_outcomes(std::size_t line, const std::vector<Token>& tokens) {
        if (outcomes_seen_) {
            error(line, tokens[0].column, "duplicate outcomes declaration");
            return;
        }
        outcomes_seen_ = true;
        if (tokens.size() == 1)
            error(line, tokens[0].column, "outcomes list is empty");
        std::unordered_set<std::string> seen;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (!seen.insert(tokens[i].text).second) {
                error(line, tokens[i].column, "duplicate outcome label",
                      tokens[i].text);
                continue;
            }
            result_.file.outcomes.push_back(tokens[i].text);
        }
    }

    void parse_event(std::size_t line, const std::vector<Token>& tokens) {
        if (tokens.size() < 3 || tokens[2].text != "=") {
            error(line, tokens[0].column,
                  "expected 'event <Name> = <outcomes...>'");
            return;
        }
        NamedEvent ev;
        ev.name = tokens[1].text;
        if (result_.file.find_event(ev.name)) {
            error(line, tokens[1].column, "duplicate event name", ev.name);
            return;
        }
        for (std::size_t i = 3; i < tokens.size(); ++i) {
            check_outcome_ref(line, tokens[i], tokens[i].text);
            ev.members.push_back(tokens[i].text);
        }
        result_.file.events.push_back(std::move(ev));
    }

    void parse_measure(std::size_t line, const std::vector<Token>& tokens) {
        if (result_.file.measure) {
            error(line, tokens[0].column, "duplicate measure block");
            return;
        }
        MeasureBlock block;
        std::unordered_set<std::string> assigned;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            auto eq = tokens[i].text.find('=');
            if (eq == std::string::npos) {
                error(line, tokens[i].column, "expected '<outcome>=<fraction>'",
                      tokens[i].text);
                continue;
            }
            std::string label = tokens[i].text.substr(0, eq);
            std::string frac = tokens[i].text.substr(eq + 1);
            check_outcome_ref(line, tokens[i], label);
            if (!assigned.insert(label).second) {
                error(line, tokens[i].column, "outcome weighted twice", label);
                continue;
            }
            auto value = parse_rational(frac);
            if (!value) {
                error(line, tokens[i].column + eq + 1, "malformed fraction",
                      frac);
                continue;
            }
            block.weights.emplace_back(std::move(label), std::move(*value));
        }
        if (outcomes_seen_) {
            for (const auto& label : result_.file.outcomes) {
                if (!assigned.count(label))
                    error(line, tokens[0].column, "no weight for outcome",
                          label);
            }
        }
        result_.file.measure = std::move(block);
    }

    void parse_possible(std::size_t line, const std::vector<Token>& tokens) {
        if (result_.file.possible) {
            error(line, tokens[0].column, "duplicate possible block");
            return;
        }
        std::vector<std::string> possible;
        std::unordered_set<std::string> seen;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            check_outcome_ref(line, tokens[i], tokens[i].text);
            if (seen.insert(tokens[i].text).second)
                possible.push_back(tokens[i].text);
        }
        if (possible.empty())
            warning(line, tokens[0].column,
                    "empty possibility space: every event is impossible and "
                    "vacuously certain");
        result_.file.possible = std::move(possible);
    }

    void parse_multinomial(std::size_t line, const std::vector<Token>& tokens) {
        if (result_.file.multinomial) {
            error(line, tokens[0].column, "duplicate multinomial block");
            return;
        }
        MultinomialBlock block;
        bool have_m = false, have_theta = false, have_k = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            auto eq = tokens[i].text.find('=');
            if (eq == std::string::npos) {
                error(line, tokens[i].column, "expected '<key>=<value>'",
                      tokens[i].text);
                continue;
            }
            std::string key = tokens[i].text.substr(0, eq);
            std::string value = tokens[i].text.substr(eq + 1);
            std::size_t value_col = tokens[i].column + eq + 1;
            if (key == "m") {
                if (!parse_uint(value, block.m))
                    error(line, value_col, "malformed category count", value);
                else
                    have_m = true;
            } else if (key == "theta") {
                have_theta = parse_theta(line, value_col, value, block.theta);
            } else if (key == "k") {
                if (!parse_uint(value, block.k))
                    error(line, value_col, "malformed trial count", value);
                else
                    have_k = true;
            } else if (key == "seed") {
                if (!parse_uint(value, block.seed))
                    error(line, value_col, "malformed seed", value);
            } else {
                error(line, tokens[i].column, "unknown multinomial key", key);
            }
        }
        if (!have_m)
            error(line, tokens[0].column, "multinomial block needs m=<count>");
        if (!have_theta)
            error(line, tokens[0].column,
                  "multinomial block needs theta=<fractions>");
        if (!have_k)
            error(line, tokens[0].column, "multinomial block needs k=<trials>");
        if (have_m && have_theta && block.theta.size() != block.m)
            error(line, tokens[0].column,
                  "theta has " + std::to_string(block.theta.size()) +
                      " entries but m=" + std::to_string(block.m));
        result_.file.multinomial = std::move(block);
    }

    bool parse_theta(std::size_t line, std::size_t column,
                     const std::string& value, std::vector<Rational>& out) {
        bool ok = true;
        std::size_t pos = 0;
        std::size_t offset = 0;
        while (pos <= value.size()) {
            std::size_t comma = value.find(',', pos);
            if (comma == std::string::npos) comma = value.size();
            std::string part = value.substr(pos, comma - pos);
            auto r = parse_rational(part);
            if (!r) {
                error(line, column + offset, "malformed fraction", part);
                ok = false;
            } else {
                out.push_back(std::move(*r));
            }
            if (comma == value.size()) break;
            offset = comma + 1;
            pos = comma + 1;
        }
        return ok && !out.empty();
    }

    template <typename UInt>
    static bool parse_uint(const std::string& s, UInt& out) {
        if (s.empty()) return false;
        UInt value = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            UInt next = value * 10 + static_cast<UInt>(c - '0');
            if (next / 10 != value) return false;  // overflow
            value = next;
        }
        out = value;
        return true;
    }

    void parse_beliefs(std::size_t line, const std::vector<Token>& tokens) {
        if (result_.file.beliefs) {
            error(line, tokens[0].column, "duplicate beliefs block");
            return;
        }
        BeliefsBlock block;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (tokens[i].text == "exchangeable") {
                block.state.exchangeable = true;
                continue;
            }
            auto prop = parse_belief(tokens[i].text);
            if (!prop) {
                error(line, tokens[i].column, "unknown belief proposition",
                      tokens[i].text);
                continue;
            }
            block.state.props.insert(*prop);
        }
        result_.file.beliefs = std::move(block);
    }

    void finish(std::size_t last_line) {
        bool needs_outcomes = !result_.file.events.empty() ||
                              result_.file.measure.has_value() ||
                              result_.file.possible.has_value();
        (void)last_line;
        if (!outcomes_seen_ && needs_outcomes)
            error(1, 1, "missing 'outcomes:' declaration");
    }

    std::string_view text_;
    ParseResult result_;
    bool outcomes_seen_ = false;
};

}  // namespace

ParseResult parse_spec(std::string_view text) { return Parser(text).run(); }

std::string serialize_spec(const SpecFile& file) {
    std::ostringstream os;
    if (!file.outcomes.empty()) {
        os << "outcomes:";
        for (const auto& o : file.outcomes) os << " " << o;
        os << "\n";
    }
    for (const auto& e : file.events) {
        os << "event " << e.name << " =";
        for (const auto& m : e.members) os << " " << m;
        os << "\n";
    }
    if (file.measure) {
        os << "measure:";
        for (const auto& [label, weight] : file.measure->weights)
            os << " " << label << "=" << weight;
        os << "\n";
    }
    if (file.possible) {
        os << "possible:";
        for (const auto& o : *file.possible) os << " " << o;
        os << "\n";
    }
    if (file.multinomial) {
        os << "multinomial: m=" << file.multinomial->m << " theta=";
        for (std::size_t i = 0; i < file.multinomial->theta.size(); ++i) {
            if (i) os << ",";
            os << file.multinomial->theta[i];
        }
        os << " k=" << file.multinomial->k << " seed=" << file.multinomial->seed
           << "\n";
    }
    if (file.beliefs) {
        os << "beliefs:";
        if (file.beliefs->state.exchangeable) os << " exchangeable";
        for (BeliefProp p : file.beliefs->state.props)
            os << " " << belief_token(p);
        os << "\n";
    }
    return os.str();
}

}  // namespace posscalc
