#include "posscalc/runner.hpp"

#include <random>
#include <sstream>

#include "posscalc/correspondence.hpp"
#include "posscalc/multinomial.hpp"
#include "posscalc/speclang.hpp"

namespace posscalc {

namespace {

// Renders report content as "key: value" lines, or "key=value" records
// under --machine. Same content either way.
class Report {
public:
    explicit Report(bool machine) : machine_(machine) {}

    void section(std::string_view name) {
        if (machine_) {
            os_ << "section=" << name << "\n";
        } else {
            if (!first_) os_ << "\n";
            os_ << "== " << name << " ==\n";
        }
        first_ = false;
    }

    void kv(std::string_view key, std::string_view value) {
        first_ = false;
        os_ << key << (machine_ ? "=" : ": ") << value << "\n";
    }
    void kv(std::string_view key, const std::string& value) {
        kv(key, std::string_view(value));
    }
    void kv(std::string_view key, const char* value) {
        kv(key, std::string_view(value));
    }
    void kv(std::string_view key, const Rational& value) {
        kv(key, to_string(value));
    }
    template <typename Int>
        requires std::is_integral_v<Int>
    void kv(std::string_view key, Int value) {
        kv(key, std::to_string(value));
    }
    void kv_pass(std::string_view key, bool pass) {
        kv(key, pass ? "PASS" : "FAIL");
    }
    void raw(const std::string& text) {
        first_ = false;
        os_ << text;
    }

    std::string str() const { return os_.str(); }

private:
    bool machine_;
    bool first_ = true;
    std::ostringstream os_;
};

struct Model {
    OutcomeSpace space;
    SigmaField field;  // discrete: one atom per outcome
    const SpecFile& spec;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Model build_model(const SpecFile& spec) {
    if (spec.outcomes.empty())
        throw UsageError("spec file declares no outcomes");
    OutcomeSpace space(spec.outcomes);
    SigmaField field = discrete_field(space);
    return Model{std::move(space), std::move(field), spec};
}

std::vector<Rational> weights_in_atom_order(const Model& model) {
    if (!model.spec.measure)
        throw UsageError("spec file has no measure block");
    std::vector<Rational> weights(model.space.size(), Rational(0));
    for (const auto& [label, weight] : model.spec.measure->weights) {
        auto idx = model.space.index_of(label);
        if (idx) weights[*idx] = weight;
    }
    return weights;
}

ProbabilityMeasure require_measure(const Model& model) {
    return ProbabilityMeasure(model.field, weights_in_atom_order(model));
}

PossibilitySpace require_possibility(const Model& model) {
    if (!model.spec.possible)
        throw UsageError("spec file has no possible block");
    return PossibilitySpace(model.space, model.space.event_of(*model.spec.possible));
}

EventSet resolve_event(const Model& model, const std::string& name) {
    if (const NamedEvent* ev = model.spec.find_event(name))
        return model.space.event_of(ev->members);
    if (auto idx = model.space.index_of(name))
        return model.space.singleton(*idx);
    throw UsageError("unknown event or outcome '" + name + "'");
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// ---------------------------------------------------------------- validate

int cmd_validate(Report& rep, const Model& model) {
    rep.section("validate");
    rep.kv("outcomes", join(model.spec.outcomes, " "));
    rep.kv("atoms", model.field.atom_count());
    auto validation = validate_measure(model.field, weights_in_atom_order(model));

    bool non_negativity = true, norming = true;
    for (const auto& v : validation.violations) {
        if (v.axiom == "Non-negativity") non_negativity = false;
        if (v.axiom == "Norming") norming = false;
    }
    rep.kv_pass("non_negativity", non_negativity);
    rep.kv_pass("norming", norming);
    rep.kv("additivity", "holds by construction (event probability is the atom sum)");
    for (const auto& v : validation.violations)
        rep.kv("violation", v.axiom + ": " + v.witness);
    rep.kv("result", validation.valid() ? "valid" : "invalid");
    return validation.valid() ? 0 : 1;
}

// ---------------------------------------------------------------- classify

int cmd_classify(Report& rep, const Model& model,
                 const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("classify requires an event name");
    EventSet e = resolve_event(model, args[0]);
    auto measure = require_measure(model);
    auto w = require_possibility(model);

    rep.section("classify");
    rep.kv("event", args[0]);
    rep.kv("members", format_event(model.space, e));
    rep.kv("probability", measure.prob(e));
    rep.kv("significance", measure.classify(e).describe());
    rep.kv("modal", w.classify_modal(e).describe());
    return 0;
}

// ---------------------------------------------------------------- condition

int cmd_condition(Report& rep, const Model& model,
                  const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("condition requires an event name");
    EventSet s0 = resolve_event(model, args[0]);
    auto measure = require_measure(model);

    rep.section("condition");
    rep.kv("conditioning_event", args[0]);
    rep.kv("members", format_event(model.space, s0));
    rep.kv("probability", measure.prob(s0));
    auto conditioned = measure.condition(s0);
    rep.kv("refined_outcomes", join(conditioned.space().labels(), " "));
    for (std::size_t i = 0; i < conditioned.field().atom_count(); ++i) {
        rep.kv("weight " +
                   format_event(conditioned.space(), conditioned.field().atoms()[i]),
               conditioned.atom_weights()[i]);
    }
    return 0;
}

// ----------------------------------------------------------- correspondence

void report_correspondence(Report& rep, const Model& model,
                           const CorrespondenceReport& axiom) {
    rep.kv("form", axiom.form_used == CorrespondenceForm::measurable_w
                       ? "measurable-W (P(W) = 1)"
                       : "universal (every impossible event insignificant)");
    if (axiom.prob_w) rep.kv("prob_w", *axiom.prob_w);
    rep.kv("holds", axiom.holds ? "yes" : "no");
    for (EventSet e : axiom.witnesses)
        rep.kv("witness", format_event(model.space, e));
    if (axiom.total_witnesses > 0)
        rep.kv("witness_total", axiom.total_witnesses);
}

int cmd_correspondence(Report& rep, const Model& model,
                       const RunOptions& opts) {
    auto measure = require_measure(model);
    auto w = require_possibility(model);
    rep.section("correspondence");
    auto axiom = check_correspondence(w, measure, opts.max_atoms);
    report_correspondence(rep, model, axiom);
    return axiom.holds ? 0 : 1;
}

// ---------------------------------------------------------------- theorems

std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> numer(0, 12);
    std::vector<boost::multiprecision::cpp_int> raw(n);
    boost::multiprecision::cpp_int total = 0;
    for (auto& r : raw) {
        r = numer(rng);
        total += r;
    }
    if (total == 0) {
        raw[0] = 1;
        total = 1;
    }
    std::vector<Rational> weights;
    weights.reserve(n);
    for (const auto& r : raw) weights.emplace_back(r, total);
    return weights;
}

// Random W that is a union of atoms and contains every significant atom,
// so the correspondence axiom holds by construction.
EventSet random_axiom_w(std::mt19937_64& rng, const ProbabilityMeasure& m) {
    EventSet w = m.support();
    std::bernoulli_distribution keep(0.5);
    for (std::size_t i = 0; i < m.field().atom_count(); ++i) {
        if (m.atom_weights()[i] == 0 && keep(rng))
            w = w | m.field().atoms()[i];
    }
    if (w.empty()) w = m.field().atoms()[0];
    return w;
}

bool refinement_dichotomies_hold(const Refinement& refined,
                                 std::size_t max_atoms) {
    for (EventSet e : refined.measure.field().enumerate_events(max_atoms)) {
        auto sig = refined.measure.classify(e);
        auto modal = refined.possibility.classify_modal(e);
        if (sig.significant() != modal.possible) return false;
        if (sig.almost_sure() != modal.certain) return false;
    }
    return true;
}

int cmd_theorems(Report& rep, const Model& model, const RunOptions& opts,
                 std::uint64_t seed) {
    auto measure = require_measure(model);
    auto w = require_possibility(model);
    bool all_pass = true;

    // Theorem 1 on the declared measure, over every significant event.
    rep.section("theorem1");
    {
        std::size_t instances = 0;
        bool consistent = true;
        std::string witness;
        for (EventSet s0 : model.field.enumerate_events(opts.max_atoms)) {
            if (s0.empty() || measure.prob(s0) == 0) continue;
            ++instances;
            auto r = theorem1_oracle(measure, s0, opts.max_atoms);
            if (!r.consistent() && consistent) {
                consistent = false;
                witness = format_event(model.space, s0);
            }
        }
        rep.kv("significant_events_checked", instances);
        rep.kv_pass("clauses_agree", consistent);
        if (!witness.empty()) rep.kv("witness", witness);
        all_pass = all_pass && consistent;
    }

    // Theorem 2: modal classification against the set definitions, plus
    // duality, over every subset of the space.
    rep.section("theorem2");
    {
        bool pass = true;
        EventSet possible = w.possible_set();
        std::uint64_t full = model.space.full_event().bits();
        for (std::uint64_t eb = 0; eb <= full; ++eb) {
            if ((eb & full) != eb) continue;
            EventSet e = EventSet::from_bits(eb);
            auto modal = w.classify_modal(e);
            bool expect_possible = e.intersects(possible);
            bool expect_certain = possible.subset_of(e);
            auto co_modal = w.classify_modal(e.complement_in(model.space));
            if (modal.possible != expect_possible ||
                modal.certain != expect_certain ||
                modal.certain != !co_modal.possible) {
                pass = false;
                break;
            }
        }
        rep.kv_pass("modal_definitions_and_duality", pass);
        all_pass = all_pass && pass;
    }

    // Theorem 3 under the axiom.
    rep.section("theorem3");
    {
        auto r = theorem3_oracle(w, measure, opts.max_atoms);
        if (!r.applicable) {
            rep.kv("applicable", "no (correspondence axiom fails)");
        } else {
            rep.kv("applicable", "yes");
            rep.kv_pass("certain_implies_almost_sure",
                        r.certain_implies_almost_sure);
            rep.kv_pass("significant_implies_possible",
                        r.significant_implies_possible);
            all_pass = all_pass && r.pass();
        }
    }

    // Theorem 4's finite shadow: bucket the atom partition.
    rep.section("bucket_bound");
    {
        auto decomposition = bucket_decomposition(measure, model.field.atoms());
        for (const auto& [k, cells] : decomposition.buckets)
            rep.kv("bucket " + std::to_string(k), cells.size());
        rep.kv("zero_cells", decomposition.zero_cells.size());
        rep.kv_pass("bound_respected", true);  // violation would have thrown
    }

    // Theorem 5 refinement, when the axiom allows it.
    rep.section("theorem5");
    {
        auto axiom = check_correspondence(w, measure, opts.max_atoms);
        if (!axiom.holds || !measure.field().contains(w.possible_set())) {
            rep.kv("applicable", "no");
        } else {
            rep.kv("applicable", "yes");
            auto refined = refine_to_correspondence(w, measure, opts.max_atoms);
            bool dichotomies =
                refinement_dichotomies_hold(refined, opts.max_atoms);
            bool reduction =
                is_reduction(refined.measure, measure, opts.max_atoms)
                    .is_reduction;
            rep.kv_pass("possible_iff_significant", dichotomies);
            rep.kv_pass("reduction_of_original", reduction);
            all_pass = all_pass && dichotomies && reduction;
        }
    }

    // Randomized campaign over measures on the same atom structure.
    rep.section("campaign");
    {
        std::mt19937_64 rng(seed);
        std::size_t failures = 0;
        for (std::size_t t = 0; t < opts.trials; ++t) {
            ProbabilityMeasure random_measure(
                model.field, random_weights(rng, model.field.atom_count()));
            PossibilitySpace random_w(model.space,
                                      random_axiom_w(rng, random_measure));

            // Random significant conditioning event.
            EventSet s0;
            std::bernoulli_distribution pick(0.5);
            for (const auto& atom : model.field.atoms())
                if (pick(rng)) s0 = s0 | atom;
            if (random_measure.prob(s0) == 0)
                s0 = s0 | random_measure.support();

            bool ok = theorem1_oracle(random_measure, s0, opts.max_atoms)
                          .consistent();
            ok = ok && theorem3_oracle(random_w, random_measure, opts.max_atoms)
                           .pass();
            bucket_decomposition(random_measure, model.field.atoms());
            auto refined = refine_to_correspondence(random_w, random_measure,
                                                    opts.max_atoms);
            ok = ok && refinement_dichotomies_hold(refined, opts.max_atoms);
            ok = ok && is_reduction(refined.measure, random_measure,
                                    opts.max_atoms)
                           .is_reduction;
            if (!ok) ++failures;
        }
        rep.kv("seed", seed);
        rep.kv("trials", opts.trials);
        rep.kv("failures", failures);
        all_pass = all_pass && failures == 0;
    }

    rep.section("summary");
    rep.kv_pass("theorems", all_pass);
    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ reduce

int cmd_reduce(Report& rep, const Model& model, const RunOptions& opts) {
    auto measure = require_measure(model);
    auto w = require_possibility(model);

    rep.section("reduce");
    auto refined = refine_to_correspondence(w, measure, opts.max_atoms);
    rep.kv("support", format_event(model.space, refined.support_in_original));
    rep.kv("refined_outcomes", join(refined.measure.space().labels(), " "));
    for (std::size_t i = 0; i < refined.measure.field().atom_count(); ++i) {
        rep.kv("weight " + format_event(refined.measure.space(),
                                        refined.measure.field().atoms()[i]),
               refined.measure.atom_weights()[i]);
    }

    bool dichotomies = refinement_dichotomies_hold(refined, opts.max_atoms);
    bool reduction =
        is_reduction(refined.measure, measure, opts.max_atoms).is_reduction;
    rep.kv_pass("possible <=> significant", dichotomies);
    rep.kv_pass("almost_sure <=> certain", dichotomies);
    rep.kv_pass("reduction_of_original", reduction);
    return (dichotomies && reduction) ? 0 : 1;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(Report& rep, const Model* model, const SpecFile& spec,
                 const RunOptions& opts) {
    (void)model;
    if (!spec.multinomial)
        throw UsageError("spec file has no multinomial block");
    const auto& block = *spec.multinomial;
    ProportionVector theta(block.theta);
    std::uint64_t seed = opts.seed_override.value_or(block.seed);

    rep.section("simulate");
    rep.kv("categories", block.m);
    std::vector<std::string> theta_text;
    for (const auto& t : theta.values()) theta_text.push_back(to_string(t));
    rep.kv("theta", join(theta_text, ","));
    rep.kv("k", block.k);
    rep.kv("seed", seed);
    auto result = simulate(theta, block.k, seed);
    rep.raw(format_convergence_table(result));
    return 0;
}

// ----------------------------------------------------------------- beliefs

int cmd_beliefs(Report& rep, const SpecFile& spec) {
    if (!spec.beliefs) throw UsageError("spec file has no beliefs block");
    const BeliefState& initial = spec.beliefs->state;

    rep.section("beliefs");
    rep.kv("exchangeable", initial.exchangeable ? "yes" : "no");
    std::vector<std::string> names;
    for (BeliefProp p : initial.props)
        names.emplace_back(belief_name(p));
    rep.kv("initial", names.empty() ? "(none)" : join(names, ", "));

    auto closure = belief_closure(initial);
    for (const auto& step : closure.trace) rep.kv("derivation", step);
    names.clear();
    for (BeliefProp p : closure.state.props)
        names.emplace_back(belief_name(p));
    rep.kv("closed", names.empty() ? "(none)" : join(names, ", "));
    rep.kv("consistent", closure.contradiction ? "no" : "yes");
    return closure.contradiction ? 1 : 0;
}

}  // namespace

RunOutcome run_command(const std::string& subcommand,
                       const std::vector<std::string>& args,
                       const std::string& spec_text, const RunOptions& opts) {
    Report rep(opts.machine);

    auto parsed = parse_spec(spec_text);
    if (!parsed.diagnostics.empty()) {
        rep.section("diagnostics");
        for (const auto& d : parsed.diagnostics)
            rep.kv(d.severity == Diagnostic::Severity::error ? "error"
                                                             : "warning",
                   d.format());
    }
    if (!parsed.ok()) return {rep.str(), 2};

    try {
        int code = 0;
        if (subcommand == "simulate") {
            code = cmd_simulate(rep, nullptr, parsed.file, opts);
        } else if (subcommand == "beliefs") {
            code = cmd_beliefs(rep, parsed.file);
        } else {
            Model model = build_model(parsed.file);
            if (subcommand == "validate") {
                code = cmd_validate(rep, model);
            } else if (subcommand == "classify") {
                code = cmd_classify(rep, model, args);
            } else if (subcommand == "condition") {
                code = cmd_condition(rep, model, args);
            } else if (subcommand == "correspondence") {
                code = cmd_correspondence(rep, model, opts);
            } else if (subcommand == "theorems") {
                std::uint64_t seed = opts.seed_override.value_or(
                    parsed.file.multinomial ? parsed.file.multinomial->seed
                                            : 0);
                code = cmd_theorems(rep, model, opts, seed);
            } else if (subcommand == "reduce") {
                code = cmd_reduce(rep, model, opts);
            } else {
                throw UsageError("unknown subcommand '" + subcommand + "'");
            }
        }
        return {rep.str(), code};
    } catch (const UsageError& e) {
        rep.kv("usage_error", e.what());
        return {rep.str(), 2};
    } catch (const DomainError& e) {
        rep.kv("error", e.what());
        return {rep.str(), 1};
    }
}

}  // namespace posscalc
