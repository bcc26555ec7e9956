#include "svf/random.hpp"

#include "svf/errors.hpp"

#include <bit>
#include <set>

namespace svf {

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

ProbabilityVector normalise_draws(std::vector<long> draws) {
    const long n = static_cast<long>(draws.size());
    mpz_class total = 0;
    for (long t = 0; t < n; ++t) total += binomial(n - 1, t) * draws[static_cast<std::size_t>(t)];
    std::vector<Rational> entries;
    entries.reserve(draws.size());
    for (long d : draws) entries.emplace_back(mpz_class(d), total);
    return ProbabilityVector::make(std::move(entries));
}

} // namespace

ProbabilityVector random_probability_vector(int n, Rng& rng, int max_draw) {
    std::vector<long> draws(static_cast<std::size_t>(n));
    bool any = false;
    for (auto& d : draws) {
        d = uniform_int(rng, 0, max_draw);
        any = any || d > 0;
    }
    if (!any) draws[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))] = 1;
    return normalise_draws(std::move(draws));
}

ProbabilityVector random_regular_vector(int n, Rng& rng, int max_draw) {
    std::vector<long> draws(static_cast<std::size_t>(n));
    for (auto& d : draws) d = uniform_int(rng, 1, max_draw);
    return normalise_draws(std::move(draws));
}

ProbabilityVector random_reasonable_vector(int n, Rng& rng, int max_draw) {
    std::vector<long> draws(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const bool interior = 4 * t >= n && 4 * t <= 3 * n;
        draws[static_cast<std::size_t>(t)] = uniform_int(rng, interior ? 1 : 0, max_draw);
    }
    bool any = false;
    for (long d : draws) any = any || d > 0;
    if (!any) draws[0] = 1;
    return normalise_draws(std::move(draws));
}

WeightedGame random_integer_game(int n, int lo, int hi, Rng& rng) {
    WeightedGame g;
    int spread = 0;
    for (int i = 0; i < n; ++i) {
        const int w = uniform_int(rng, lo, hi);
        g.weights.emplace_back(w);
        spread += w < 0 ? -w : w;
    }
    g.threshold = Rational(uniform_int(rng, -spread, spread));
    return g;
}

WeightedGame random_rational_game(int n, Rng& rng, bool nonnegative) {
    WeightedGame g;
    for (int i = 0; i < n; ++i) {
        g.weights.emplace_back(mpz_class(uniform_int(rng, nonnegative ? 0 : -6, 6)), mpz_class(uniform_int(rng, 1, 4)));
    }
    g.threshold = Rational(mpz_class(uniform_int(rng, -3 * n, 3 * n)), mpz_class(uniform_int(rng, 1, 4)));
    return g;
}

std::vector<Rational> random_special_form(int n, int max_head, Rng& rng) {
    std::vector<Rational> head;
    for (int i = 0; i < n; ++i) head.emplace_back(uniform_int(rng, 1, max_head));
    return special_form_from_head(head);
}

RPartitionInstance random_promise_instance(int n, int max_c, Rng& rng, const PromiseBounds& bounds) {
    std::vector<int> allowed_k;
    for (int k = 0; k <= n; ++k) {
        if (bounds.b1 * Rational(n) <= Rational(k) && Rational(k) <= bounds.b2 * Rational(n)) allowed_k.push_back(k);
    }
    if (allowed_k.empty()) throw Error(ErrorKind::PreconditionViolated, "no admissible k for this n");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        RPartitionInstance inst;
        for (int i = 0; i < n; ++i) inst.c.push_back(uniform_int(rng, 1, max_c));
        std::int64_t total = 0;
        for (auto v : inst.c) total += v;
        std::set<int> sizes;
        if (total % 2 == 0) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::int64_t s = 0;
                for (int i = 0; i < n; ++i) {
                    if ((mask >> i) & 1U) s += inst.c[static_cast<std::size_t>(i)];
                }
                if (2 * s == total) sizes.insert(std::popcount(mask));
            }
        }
        // solutions come in complementary pairs, so at most {k, n-k} may appear
        std::vector<int> fits;
        for (int k : allowed_k) {
            bool ok = true;
            for (int s : sizes) ok = ok && (s == k || s == n - k);
            if (ok) fits.push_back(k);
        }
        if (fits.empty()) continue;
        inst.k = fits[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(fits.size()) - 1))];
        return inst;
    }
    throw Error(ErrorKind::PreconditionViolated, "could not draw a promise instance");
}

} // namespace svf
