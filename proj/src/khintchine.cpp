#include "svf/khintchine.hpp"

#include "svf/coalition_table.hpp"
#include "svf/errors.hpp"

#include <bit>

namespace svf {

namespace {

void require_same_size(std::size_t len, const ProbabilityVector& p) {
    if (static_cast<int>(len) != p.size()) {
        throw Error(ErrorKind::DimensionMismatch, "vector has " + std::to_string(len) +
                                                      " coordinates but the probability vector has " +
                                                      std::to_string(p.size()) + " entries");
    }
}

// Exhaustive sum over x of mu'(x) |a . x|, grouped by weight class.
Rational weighted_abs_sum_bruteforce(const std::vector<Rational>& a, const ProbabilityVector& p, int cap) {
    const int n = static_cast<int>(a.size());
    require_enumerable(n, cap);
    std::vector<Rational> per_class(static_cast<std::size_t>(n) + 1);
    Rational dot_value;
    for (const auto& v : a) dot_value -= v;
    std::uint64_t mask = 0;
    per_class[0] += abs(dot_value);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int j = std::countr_zero(k);
        mask ^= std::uint64_t{1} << j;
        const Rational twice = a[static_cast<std::size_t>(j)] + a[static_cast<std::size_t>(j)];
        if ((mask >> j) & 1U) dot_value += twice;
        else dot_value -= twice;
        per_class[static_cast<std::size_t>(std::popcount(mask))] += abs(dot_value);
    }
    Rational sum;
    for (int wt = 0; wt <= n; ++wt) sum += mu_prime(p, wt) * per_class[static_cast<std::size_t>(wt)];
    return sum;
}

Rational weighted_abs_sum_dp(const std::vector<Rational>& a, const ProbabilityVector& p) {
    const auto scaled = scale_vector_to_integers(a);
    const CoalitionCountTable table(scaled.values);
    std::int64_t total = 0;
    for (std::int64_t v : scaled.values) total += v;
    Rational sum;
    for (int wt = 0; wt <= table.players(); ++wt) {
        const Rational mass = mu_prime(p, wt);
        if (mass.is_zero()) continue;
        mpz_class acc = 0;
        const auto counts = table.row(wt);
        for (std::size_t k = 0; k < counts.size(); ++k) {
            if (counts[k] == 0) continue;
            const std::int64_t s = table.min_sum() + static_cast<std::int64_t>(k);
            const std::int64_t value = 2 * s - total;
            acc += mpz_class(static_cast<unsigned long>(counts[k])) * static_cast<unsigned long>(value < 0 ? -value : value);
        }
        sum += mass * Rational(acc);
    }
    return sum / scaled.scale;
}

} // namespace

ScaledVector scale_vector_to_integers(const std::vector<Rational>& a) {
    const mpz_class scale = common_denominator(a);
    ScaledVector out;
    out.scale = Rational(scale);
    out.values.reserve(a.size());
    const mpz_class limit = mpz_class(1) << 62;
    for (const auto& v : a) {
        const mpz_class z = mpq_class(v.value() * scale).get_num();
        if (::abs(z) >= limit) throw Error(ErrorKind::WeightRangeOverflow, "scaled coordinate exceeds 2^62");
        out.values.push_back(z.get_si());
    }
    return out;
}

KhintchineResult khintchine(const std::vector<Rational>& a, const ProbabilityVector& p, KhintchineMethod method,
                            int cap) {
    require_same_size(a.size(), p);
    const Rational sum = method == KhintchineMethod::dp ? weighted_abs_sum_dp(a, p)
                                                         : weighted_abs_sum_bruteforce(a, p, cap);
    return KhintchineResult{sum / lambda_norm(p), method};
}

std::vector<std::uint64_t> zero_counts_by_class(std::span<const std::int64_t> w) {
    const CoalitionCountTable table(w);
    std::int64_t total = 0;
    for (std::int64_t v : w) total += v;
    std::vector<std::uint64_t> zeros(w.size() + 1, 0);
    // w . x = 0  <=>  2 * (sum over the +1 coordinates) = total
    if (total % 2 != 0) return zeros;
    for (int wt = 0; wt <= table.players(); ++wt) zeros[static_cast<std::size_t>(wt)] = table.count(wt, total / 2);
    return zeros;
}

std::vector<std::uint64_t> zero_counts_by_class_bruteforce(std::span<const std::int64_t> w, int cap) {
    const int n = static_cast<int>(w.size());
    require_enumerable(n, cap);
    std::vector<std::uint64_t> zeros(w.size() + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += ((mask >> i) & 1U) ? w[static_cast<std::size_t>(i)] : -w[static_cast<std::size_t>(i)];
        if (s == 0) ++zeros[static_cast<std::size_t>(std::popcount(mask))];
    }
    return zeros;
}

namespace {

Rational probability_of_counts(const std::vector<std::uint64_t>& zeros, const ProbabilityVector& p) {
    Rational mass;
    for (std::size_t wt = 0; wt < zeros.size(); ++wt) {
        if (zeros[wt] != 0) mass += mu_prime(p, static_cast<int>(wt)) * Rational(zeros[wt]);
    }
    return mass / lambda_norm(p);
}

} // namespace

Rational partition_probability(std::span<const std::int64_t> w, const ProbabilityVector& p) {
    require_same_size(w.size(), p);
    return probability_of_counts(zero_counts_by_class(w), p);
}

Rational partition_probability_bruteforce(std::span<const std::int64_t> w, const ProbabilityVector& p, int cap) {
    require_same_size(w.size(), p);
    return probability_of_counts(zero_counts_by_class_bruteforce(w, cap), p);
}

Rational interior_zero_probability(const std::vector<Rational>& w, const ProbabilityVector& p, int cap) {
    require_same_size(w.size(), p);
    const int n = static_cast<int>(w.size());
    require_enumerable(n, cap);
    const std::uint64_t all_ones = (std::uint64_t{1} << n) - 1;
    Rational mass;
    for (std::uint64_t mask = 1; mask < all_ones; ++mask) {
        const Assignment x(n, mask);
        if (dot(w, x).is_zero()) mass += mu_prime(p, x);
    }
    return mass / lambda_norm(p);
}

} // namespace svf
