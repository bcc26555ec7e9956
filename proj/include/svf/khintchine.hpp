#pragma once

#include "svf/game.hpp"
#include "svf/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace svf {

enum class KhintchineMethod { brute, dp };

/// K_mu(a) = E_{x ~ mu_p}[|a . x|].
struct KhintchineResult {
    Rational value;
    KhintchineMethod method = KhintchineMethod::brute;
};

/// Exact Khintchine constant under mu_p. The dp method clears denominators
/// of `a`, counts assignments per (weight class, dot product) and divides
/// the scale back out.
KhintchineResult khintchine(const std::vector<Rational>& a, const ProbabilityVector& p,
                            KhintchineMethod method = KhintchineMethod::dp, int cap = kDefaultEnumerationCap);

/// Number of zeros of w . x in each weight class wt(x) = 0..n.
std::vector<std::uint64_t> zero_counts_by_class(std::span<const std::int64_t> w);
std::vector<std::uint64_t> zero_counts_by_class_bruteforce(std::span<const std::int64_t> w,
                                                           int cap = kDefaultEnumerationCap);

/// Pr_{x ~ mu_p}[w . x = 0], counted with the (index, size, sum) DP.
Rational partition_probability(std::span<const std::int64_t> w, const ProbabilityVector& p);
Rational partition_probability_bruteforce(std::span<const std::int64_t> w, const ProbabilityVector& p,
                                          int cap = kDefaultEnumerationCap);

/// Pr_{x ~ mu_p}[w . x = 0 and x is neither all -1 nor all +1], exhaustive.
Rational interior_zero_probability(const std::vector<Rational>& w, const ProbabilityVector& p,
                                   int cap = kDefaultEnumerationCap);

/// Clears denominators: returns c * a as int64 together with c. Throws
/// WeightRangeOverflow if the scaled vector leaves the int64 range.
struct ScaledVector {
    std::vector<std::int64_t> values;
    Rational scale;
};
ScaledVector scale_vector_to_integers(const std::vector<Rational>& a);

} // namespace svf
