#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posscalc/event_algebra.hpp"
#include "posscalc/rational.hpp"

namespace posscalc {

// A finite prefix of a repeated-trials sequence; values are categories
// numbered 1..m.
struct TrialSequence {
    unsigned m = 0;
    std::vector<unsigned> values;

    // Throws DomainError naming the position of an out-of-range value.
    static TrialSequence make(unsigned m, std::vector<unsigned> values);
    std::size_t length() const { return values.size(); }
};

struct CountVector {
    std::vector<std::uint64_t> counts;  // one per category

    std::uint64_t total() const;
};

// Per-category proportions, exact and summing to one.
class ProportionVector {
public:
    explicit ProportionVector(std::vector<Rational> theta);

    std::size_t categories() const { return theta_.size(); }
    const std::vector<Rational>& values() const { return theta_; }
    const Rational& operator[](std::size_t i) const { return theta_.at(i); }

private:
    std::vector<Rational> theta_;
};

CountVector count_vector(const TrialSequence& x);

struct ProportionEstimate {
    std::vector<Rational> estimate;  // n_k / k, a finite-prefix average
    std::uint64_t k = 0;
};

// The prefix average n_k / k. Never a limit claim; k = 0 is an error.
ProportionEstimate proportion_estimate(const TrialSequence& x);

// Mu(n | k, theta): multinomial coefficient times the product of powers.
// Convention 0^0 = 1, so a zero-probability category with a zero count
// contributes nothing. Throws DomainError when the counts do not sum to k.
Rational multinomial_pmf(const CountVector& n, std::uint64_t k,
                         const ProportionVector& theta);

// An explicit joint pmf over all m^k sequences of length k, indexed by
// base-m rank (first trial most significant).
struct JointPmf {
    unsigned m = 0;
    unsigned k = 0;
    std::vector<Rational> probs;

    std::size_t sequence_count() const { return probs.size(); }
    std::vector<unsigned> sequence_at(std::size_t rank) const;
    std::size_t rank_of(const std::vector<unsigned>& seq) const;
};

// The iid product pmf induced by theta.
JointPmf iid_joint_pmf(const ProportionVector& theta, unsigned k);

struct ExchangeabilityResult {
    bool exchangeable = false;
    // First pair of sequences that are permutations of each other but get
    // different probabilities.
    std::vector<unsigned> witness_a;
    std::vector<unsigned> witness_b;
};

// Verifies permutation invariance of the joint distribution. Throws
// DomainError when the pmf does not sum exactly to one or exceeds the
// enumeration cap.
ExchangeabilityResult exchangeability_check(const JointPmf& joint,
                                            std::size_t max_sequences = 1u << 20);

struct SimulationCheckpoint {
    std::uint64_t k = 0;
    std::vector<double> estimates;
};

struct SimulationResult {
    TrialSequence sequence;
    std::vector<SimulationCheckpoint> table;  // powers of two, then final k
    std::uint64_t seed = 0;
};

// Seeded iid sampling under theta. The generator is pinned: mt19937_64
// seeded directly, one draw per trial mapped to [0,1) by the top 53 bits,
// category chosen by cumulative theta. Identical seeds give identical
// sequences on every platform.
SimulationResult simulate(const ProportionVector& theta, std::uint64_t k,
                          std::uint64_t seed);

std::string format_convergence_table(const SimulationResult& result);

}  // namespace posscalc
