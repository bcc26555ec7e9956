#pragma once

// Executable forms of the counting-reduction chain:
//   #R-Partition -> #Partition under mu_p -> three Khintchine instances
//   -> linear optimisation over the special-form semivalue polytope,
// plus the convex-combination membership certificate and the transfer
// between special-form games and positive-weight games.

#include "svf/game.hpp"
#include "svf/khintchine.hpp"
#include "svf/rational.hpp"
#include "svf/semivalue.hpp"

#include <cstdint>
#include <vector>

namespace svf {

struct RPartitionInstance {
    std::vector<std::int64_t> c;  // positive integers
    int k = 0;

    int size() const noexcept { return static_cast<int>(c.size()); }
};

/// 0 < b1 <= b2 < 1; the promise requires b1 * n <= k <= b2 * n.
struct PromiseBounds {
    Rational b1 = Rational(1, 4);
    Rational b2 = Rational(3, 4);
};

struct PromiseReport {
    bool holds = false;       // every half-sum subset has size k or n - k
    bool k_in_range = false;  // b1 * n <= k <= b2 * n
    std::uint64_t count = 0;  // number of subsets summing to half the total
};

/// Brute-force subset enumeration. An odd total has no solutions: the
/// promise holds vacuously with count 0.
PromiseReport check_rpartition_promise(const RPartitionInstance& inst, const PromiseBounds& bounds = {},
                                       int cap = kDefaultEnumerationCap);

struct PartitionReduction {
    std::vector<std::int64_t> weights;  // (s c_1, ..., s c_n, -s W/2, -s W/2)
    std::int64_t scale = 1;             // s: 1, or 2 when W is odd
};

/// w = (c_1, ..., c_n, -W/2, -W/2); doubled first when W is odd.
PartitionReduction reduce_rpartition_to_partition(const RPartitionInstance& inst);

/// Solution count from Pr[w . x = 0] over n + 2 players:
///   (Lambda * prob - (p_{n+1} + p_0)) / (p_{n-k+1} + p_{n-k} + p_{k+1} + p_k).
Rational recover_count_from_partition_prob(const Rational& prob, const ProbabilityVector& p, int k, int n);

/// (a_1, ..., a_n, -A/2, -A/2) with a_i > 0 and at least one positive
/// coordinate; throws BadShape otherwise. Returns n.
int require_special_form(const std::vector<Rational>& a);
bool is_special_form(const std::vector<Rational>& a);

/// Special-form vector built from positive first coordinates.
std::vector<Rational> special_form_from_head(const std::vector<Rational>& head);

struct KhintchineTriple {
    std::vector<Rational> c;  // 2a
    std::vector<Rational> d;  // a_1 - y, tails + y/2
    std::vector<Rational> e;  // a_1 + y, tails - y/2
    Rational y;
};

/// Throws BadShape or BadY (unless 0 < y < 1/2 < a_1).
KhintchineTriple build_khintchine_triple(const std::vector<Rational>& a, const Rational& y = Rational(1, 4));

/// (Kd + Ke - Kc) / (2y) + (p_0 + p_{n+1}) / Lambda.
Rational recover_prob_from_khintchine(const Rational& kd, const Rational& ke, const Rational& kc,
                                      const Rational& y, const ProbabilityVector& p);

/// Pointwise check of the case analysis behind the triple:
///   c . x != 0                                  =>  |d.x| + |e.x| = |c.x|
///   x not constant, x_{n+1} != x_{n+2}, c.x = 0  =>  |d.x| + |e.x| = 2y
///   x constant                                  =>  c.x = d.x = e.x = 0
struct TripleCaseReport {
    std::uint64_t points = 0;
    std::uint64_t nonzero_case_failures = 0;
    std::uint64_t interior_zero_failures = 0;
    std::uint64_t constant_point_failures = 0;

    bool ok() const noexcept {
        return nonzero_case_failures == 0 && interior_zero_failures == 0 && constant_point_failures == 0;
    }
};
TripleCaseReport check_triple_cases(const KhintchineTriple& triple, int cap = kDefaultEnumerationCap);

enum class PolytopeMode { closed_form, vertex_enum };

struct PolytopeVertex {
    WeightedGame game;        // special form, threshold 0
    SemivalueVector vertex;
};

/// Distinct semivalue vectors of special-form games whose first n weights
/// are integers in [1, bound]; one representative per truth table.
/// Requires n + 2 <= 8.
std::vector<PolytopeVertex> enumerate_polytope_vertices(const ProbabilityVector& p, int bound, int jobs = 1);

struct PolytopeOptimum {
    Rational value;
    WeightedGame witness;
    SemivalueVector witness_semivalues;
    std::uint64_t vertices_examined = 0;
};

/// max over the polytope of a . c. closed_form returns (Lambda/2) K_mu(a)
/// with witness sign(a . x); vertex_enum maximises over the enumerated
/// vertices (a sampled subset of the polytope's vertices).
PolytopeOptimum optimize_over_polytope(const std::vector<Rational>& a, const ProbabilityVector& p,
                                       PolytopeMode mode, int bound = 3, int jobs = 1,
                                       int cap = kDefaultEnumerationCap);

struct CaratheodoryCertificate {
    std::vector<Rational> point;
    std::vector<std::vector<Rational>> vertices;
    std::vector<WeightedGame> witnesses;
    std::vector<Rational> lambdas;
};

/// Throws ArityMismatch for inconsistent sizes or m > n + 3, and
/// ShapeViolation when a witness is not special form with threshold 0.
/// Otherwise true iff every vertex is its witness's semivalue vector and
/// the lambdas form a convex combination equal to the point.
bool verify_membership_certificate(const CaratheodoryCertificate& cert, const ProbabilityVector& p,
                                   int cap = kDefaultEnumerationCap);

/// Target shifts relating f = (a, -A/2, -A/2) and g = (a, +A/2, +A/2):
///   semivalue_g(i) = semivalue_f(i) - first   for i <= n
///   semivalue_g(i) = semivalue_f(i) + tail    for the two tail players
struct PtonShifts {
    Rational first;  // 2 (p_{n+1} - p_{n-1})
    Rational tail;   // 2 sum_{t<n} C(n,t) (p_t + p_{t+1})
};
PtonShifts pton_shifts(const ProbabilityVector& p);

struct VerificationInstance {
    WeightedGame game;
    std::vector<Rational> targets;
};

/// Maps a special-form verification instance to one with positive weights
/// (a_1, ..., a_n, A/2, A/2), threshold 0, and shifted targets.
VerificationInstance pton_transform(const std::vector<Rational>& special_weights, const std::vector<Rational>& targets,
                                    const ProbabilityVector& p);

} // namespace svf
