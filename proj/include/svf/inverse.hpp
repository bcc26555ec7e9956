#pragma once

#include "svf/game.hpp"
#include "svf/rational.hpp"
#include "svf/semivalue.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace svf {

struct CanonicalGame {
    IntegerGame game;
    TruthTable table;
};

/// All games with integer weights in [0, bound] and integer threshold in
/// [-n*bound, n*bound], one per distinct truth table. Each class keeps the
/// lexicographically smallest (weights, threshold) and classes appear in
/// that order.
std::vector<CanonicalGame> enumerate_canonical_games(int n, int bound);

/// Inverse problem input: find w >= 0 with sum w = 1 whose game
/// sign(w . x - theta) has the target semivalues.
struct InverseInstance {
    std::vector<Rational> targets;
    Rational theta;
    ProbabilityVector pvec;
};

enum class InverseStatus { found, no_solution_in_class, nearest };

constexpr std::string_view to_string(InverseStatus s) noexcept {
    switch (s) {
    case InverseStatus::found: return "found";
    case InverseStatus::no_solution_in_class: return "no_solution_in_class";
    case InverseStatus::nearest: return "nearest";
    }
    return "unknown";
}

struct InverseResult {
    InverseStatus status = InverseStatus::no_solution_in_class;
    std::vector<Rational> weights;  // normalised to sum 1 when present
    Rational distance;
    std::uint64_t games_examined = 0;
};

enum class DistanceNorm { l1, l2 };

/// Distance between two equally long vectors: sum |u-v| or sum (u-v)^2.
Rational distance(const std::vector<Rational>& u, const std::vector<Rational>& v, DistanceNorm norm);

/// Scans integer weight vectors in [0, bound]^n (lexicographic order, all
/// zero skipped), normalises each to sum 1 and keeps the instance threshold.
/// Returns the first exact match. no_solution_in_class only says that no
/// game in this class matches.
InverseResult inverse_exact(const InverseInstance& inst, int bound = 3, int jobs = 1);

/// Same candidate class; returns the candidate minimising the distance,
/// ties going to the lexicographically smallest weights.
InverseResult inverse_nearest(const InverseInstance& inst, int bound = 3, DistanceNorm norm = DistanceNorm::l1,
                              int jobs = 1);

struct HeuristicOptions {
    int iterations = 20;
    /// Each weight is multiplied by 1 + step * (r - 1), r the clamped ratio.
    Rational step = Rational(1);
    Rational theta = Rational(0);
};

/// Multiplicative update on Banzhaf values: w_i *= target_i / current_i
/// clamped to [1/2, 2], renormalised, exact semivalues recomputed. Returns
/// the best iterate in squared l2 distance; convergence is not guaranteed.
InverseResult iterative_banzhaf_heuristic(const std::vector<Rational>& targets, const HeuristicOptions& options = {});

struct UniquenessReport {
    bool hypothesis_met = false;  // the two semivalue vectors coincide
    SemivalueVector f_values;
    SemivalueVector g_values;
    std::uint64_t points_checked = 0;
    std::vector<Assignment> disagreements;
};

/// Two games with equal weight sums and equal thresholds. When their
/// semivalues coincide, lists every x with mu'(x) != 0 and
/// |w.x - theta| + |v.x - theta| != 0 where they differ (expected: none).
UniquenessReport uniqueness_check(const WeightedGame& f, const WeightedGame& g, const ProbabilityVector& p,
                                  int cap = kDefaultEnumerationCap);

struct CensusReport {
    std::uint64_t games = 0;
    std::uint64_t groups = 0;
    std::uint64_t pairs_compared = 0;
    std::uint64_t counterexamples = 0;
};

/// Every (w, theta) from the canonical-games grid (not deduplicated),
/// grouped by (sum w, theta, semivalue vector under p); within each group
/// the truth tables must agree on every x with mu'(x) > 0.
CensusReport uniqueness_census(int n, int bound, const ProbabilityVector& p);

using InverseOracle = std::function<InverseResult(const InverseInstance&)>;

/// Verification through an inverse oracle: solve the inverse instance
/// (targets, theta / sum a); "NO" means false, otherwise compare the
/// returned game with a / sum a on every x with mu'(x) > 0.
bool verification_via_inverse(const WeightedGame& instance, const std::vector<Rational>& targets,
                              const ProbabilityVector& p, const InverseOracle& oracle,
                              int cap = kDefaultEnumerationCap);

} // namespace svf
