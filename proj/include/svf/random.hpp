#pragma once

// Seeded generators for property checks. Everything is driven by an
// explicit std::mt19937_64 so runs are reproducible.

#include "svf/game.hpp"
#include "svf/reduction.hpp"

#include <random>

namespace svf {

using Rng = std::mt19937_64;

/// Random valid p: integer draws in [0, max_draw], normalised exactly. At
/// least one entry is positive.
ProbabilityVector random_probability_vector(int n, Rng& rng, int max_draw = 9);

/// Strictly positive entries (a regular semivalue).
ProbabilityVector random_regular_vector(int n, Rng& rng, int max_draw = 9);

/// Entries positive on every t with n/4 <= t <= 3n/4 (so reasonable at
/// alpha = beta = 1/4 once n >= 2), arbitrary elsewhere.
ProbabilityVector random_reasonable_vector(int n, Rng& rng, int max_draw = 9);

/// Integer weights in [lo, hi] and a threshold in [-sum|w|, sum|w|].
WeightedGame random_integer_game(int n, int lo, int hi, Rng& rng);

/// Small rational weights p/q with |p| <= 6, 1 <= q <= 4 and a rational threshold.
WeightedGame random_rational_game(int n, Rng& rng, bool nonnegative = false);

/// Special-form vector with integer head entries in [1, max_head].
std::vector<Rational> random_special_form(int n, int max_head, Rng& rng);

/// Random instance satisfying the promise: c_i in [1, max_c], k drawn from the
/// allowed range and checked by enumeration. Retries until one fits.
RPartitionInstance random_promise_instance(int n, int max_c, Rng& rng, const PromiseBounds& bounds = {});

int uniform_int(Rng& rng, int lo, int hi);

} // namespace svf
