#include "posscalc/multinomial.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace posscalc {

TrialSequence TrialSequence::make(unsigned m, std::vector<unsigned> values) {
    if (m == 0) throw DomainError("number of categories must be positive");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > m)
            throw DomainError("trial value " + std::to_string(values[i]) +
                              " at position " + std::to_string(i + 1) +
                              " is outside 1.." + std::to_string(m));
    }
    return TrialSequence{m, std::move(values)};
}

std::uint64_t CountVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ProportionVector::ProportionVector(std::vector<Rational> theta)
    : theta_(std::move(theta)) {
    if (theta_.empty())
        throw DomainError("proportion vector must have at least one category");
    Rational sum = 0;
    for (const auto& t : theta_) {
        if (t < 0)
            throw DomainError("proportion " + to_string(t) + " is negative");
        sum += t;
    }
    if (sum != 1)
        throw DomainError("proportions sum to " + to_string(sum) +
                          ", expected 1");
}

CountVector count_vector(const TrialSequence& x) {
    CountVector n;
    n.counts.assign(x.m, 0);
    for (unsigned v : x.values) ++n.counts[v - 1];
    return n;
}

ProportionEstimate proportion_estimate(const TrialSequence& x) {
    if (x.length() == 0)
        throw DomainError("proportion estimate requires at least one trial");
    CountVector n = count_vector(x);
    ProportionEstimate est;
    est.k = x.length();
    est.estimate.reserve(x.m);
    for (auto c : n.counts)
        est.estimate.emplace_back(Rational(c) / Rational(est.k));
    return est;
}

Rational multinomial_pmf(const CountVector& n, std::uint64_t k,
                         const ProportionVector& theta) {
    if (n.counts.size() != theta.categories())
        throw DomainError("count vector and proportion vector disagree on the "
                          "number of categories");
    if (n.total() != k)
        throw DomainError("counts sum to " + std::to_string(n.total()) +
                          ", expected k = " + std::to_string(k));

    // k! / (n_1! ... n_m!), built incrementally to stay in integers.
    boost::multiprecision::cpp_int coeff = 1;
    std::uint64_t consumed = 0;
    for (auto c : n.counts) {
        for (std::uint64_t j = 1; j <= c; ++j) {
            ++consumed;
            coeff = coeff * consumed / j;
        }
    }

    Rational result(coeff);
    for (std::size_t a = 0; a < n.counts.size(); ++a) {
        for (std::uint64_t j = 0; j < n.counts[a]; ++j) result *= theta[a];
        // n_a = 0 leaves the factor at 1 even when theta_a = 0.
    }
    return result;
}

std::vector<unsigned> JointPmf::sequence_at(std::size_t rank) const {
    std::vector<unsigned> seq(k);
    for (unsigned i = k; i-- > 0;) {
        seq[i] = static_cast<unsigned>(rank % m) + 1;
        rank /= m;
    }
    return seq;
}

std::size_t JointPmf::rank_of(const std::vector<unsigned>& seq) const {
    std::size_t rank = 0;
    for (unsigned v : seq) rank = rank * m + (v - 1);
    return rank;
}

JointPmf iid_joint_pmf(const ProportionVector& theta, unsigned k) {
    JointPmf joint;
    joint.m = static_cast<unsigned>(theta.categories());
    joint.k = k;
    std::size_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= joint.m;
    joint.probs.reserve(total);
    for (std::size_t rank = 0; rank < total; ++rank) {
        Rational p = 1;
        for (unsigned v : joint.sequence_at(rank)) p *= theta[v - 1];
        joint.probs.push_back(std::move(p));
    }
    return joint;
}

ExchangeabilityResult exchangeability_check(const JointPmf& joint,
                                            std::size_t max_sequences) {
    if (joint.sequence_count() > max_sequences)
        throw DomainError("joint pmf exceeds the enumeration cap of " +
                          std::to_string(max_sequences) + " sequences");
    Rational sum = 0;
    for (const auto& p : joint.probs) sum += p;
    if (sum != 1)
        throw DomainError("joint pmf sums to " + to_string(sum) +
                          ", expected 1");

    // Sequences with equal count vectors are permutations of one another;
    // compare each against the first representative of its class.
    std::map<std::vector<unsigned>, std::size_t> representative;
    for (std::size_t rank = 0; rank < joint.sequence_count(); ++rank) {
        auto seq = joint.sequence_at(rank);
        auto sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        auto [it, inserted] = representative.try_emplace(sorted, rank);
        if (!inserted && joint.probs[rank] != joint.probs[it->second]) {
            ExchangeabilityResult r;
            r.witness_a = joint.sequence_at(it->second);
            r.witness_b = std::move(seq);
            return r;
        }
    }
    ExchangeabilityResult r;
    r.exchangeable = true;
    return r;
}

SimulationResult simulate(const ProportionVector& theta, std::uint64_t k,
                          std::uint64_t seed) {
    if (k == 0) throw DomainError("simulation requires k >= 1");

    std::vector<double> cumulative;
    cumulative.reserve(theta.categories());
    Rational acc = 0;
    for (const auto& t : theta.values()) {
        acc += t;
        cumulative.push_back(static_cast<double>(acc));
    }
    cumulative.back() = 1.0;

    std::mt19937_64 rng(seed);
    SimulationResult result;
    result.seed = seed;
    result.sequence.m = static_cast<unsigned>(theta.categories());
    result.sequence.values.reserve(k);

    std::vector<std::uint64_t> counts(theta.categories(), 0);
    auto checkpoint = [&](std::uint64_t at) {
        SimulationCheckpoint cp;
        cp.k = at;
        cp.estimates.reserve(counts.size());
        for (auto c : counts)
            cp.estimates.push_back(static_cast<double>(c) /
                                   static_cast<double>(at));
        result.table.push_back(std::move(cp));
    };

    std::uint64_t next_checkpoint = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        unsigned category = static_cast<unsigned>(theta.categories());
        for (std::size_t a = 0; a < cumulative.size(); ++a) {
            if (u < cumulative[a]) {
                category = static_cast<unsigned>(a) + 1;
                break;
            }
        }
        result.sequence.values.push_back(category);
        ++counts[category - 1];
        if (i == next_checkpoint) {
            checkpoint(i);
            next_checkpoint *= 2;
        }
    }
    if (result.table.empty() || result.table.back().k != k) checkpoint(k);
    return result;
}

std::string format_convergence_table(const SimulationResult& result) {
    std::ostringstream os;
    os << "k";
    for (unsigned a = 1; a <= result.sequence.m; ++a) os << "\ttheta_" << a;
    os << "\n";
    for (const auto& cp : result.table) {
        os << cp.k;
        char buf[32];
        for (double e : cp.estimates) {
            std::snprintf(buf, sizeof buf, "%.6f", e);
            os << "\t" << buf;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace posscalc
