#pragma once

#include "svf/game.hpp"
#include "svf/rational.hpp"

#include <vector>

namespace svf {

struct SemivalueVector {
    std::vector<Rational> values;

    int size() const noexcept { return static_cast<int>(values.size()); }
    friend bool operator==(const SemivalueVector&, const SemivalueVector&) = default;
};

/// The two terms of the mu'-reformulation: semivalue_i = (hat_i + cf) / 2.
struct ReformulationTerms {
    std::vector<Rational> hat;
    Rational cf;
};

enum class SemivalueMethod { brute, dp };

/// Semivalues of the Boolean function given by `table`, straight from the definition:
///   sum_{x_i=-1} p_{wt(x)} f(x) x_i + sum_{x_i=+1} p_{wt(x)-1} f(x) x_i.
SemivalueVector semivalues_from_table(const TruthTable& table, const ProbabilityVector& p);

/// Exhaustive evaluation over all 2^n assignments in exact rationals.
SemivalueVector semivalues_bruteforce(const WeightedGame& g, const ProbabilityVector& p,
                                      int cap = kDefaultEnumerationCap);

struct PivotDpOptions {
    /// Clear denominators by their LCM first; when false, non-integer
    /// weights or threshold raise NonIntegerWeights.
    bool allow_scaling = true;
    /// Players are processed independently; > 1 spreads them over threads.
    int jobs = 1;
};

/// Pivot-count form: semivalue_i = 2 sum_t p_t (#{S : |S| = t, S loses,
/// S+i wins} - #{S : |S| = t, S wins, S+i loses}), counted with a
/// (size, weight-sum) table. Pseudo-polynomial in the total weight.
SemivalueVector semivalues_pivot_dp(const WeightedGame& g, const ProbabilityVector& p,
                                    const PivotDpOptions& options = {});
SemivalueVector semivalues_pivot_dp(const IntegerGame& g, const ProbabilityVector& p, int jobs = 1);

SemivalueVector semivalues(const WeightedGame& g, const ProbabilityVector& p, SemivalueMethod method,
                           int cap = kDefaultEnumerationCap);

ReformulationTerms reformulation_terms(const TruthTable& table, const ProbabilityVector& p);
ReformulationTerms reformulation_terms(const WeightedGame& g, const ProbabilityVector& p,
                                       int cap = kDefaultEnumerationCap);

/// Exact componentwise comparison of the game's semivalues with `targets`.
bool semivalues_match(const WeightedGame& g, const ProbabilityVector& p, const std::vector<Rational>& targets,
                      int cap = kDefaultEnumerationCap);

/// Verification problem for weighted voting games: nonnegative weights are
/// required (PreconditionViolated otherwise).
bool verify_semivalues(const WeightedGame& g, const ProbabilityVector& p, const std::vector<Rational>& targets,
                       int cap = kDefaultEnumerationCap);

} // namespace svf
