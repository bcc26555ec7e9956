#include "svf/semivalue.hpp"

#include "svf/coalition_table.hpp"
#include "svf/errors.hpp"
#include "svf/parallel.hpp"

#include <bit>

namespace svf {

namespace {

void require_same_size(int players, int p_size) {
    if (players != p_size) {
        throw Error(ErrorKind::DimensionMismatch, "game has " + std::to_string(players) +
                                                      " players but the probability vector has " +
                                                      std::to_string(p_size) + " entries");
    }
}

// tally[i * n + t] accumulates the integer coefficient of p_t in semivalue i.
std::vector<std::int64_t> pivot_tally(const TruthTable& table) {
    const int n = table.size();
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::int64_t> tally(un * (un == 0 ? 1 : un), 0);
    for (std::uint64_t mask = 0; mask < table.points(); ++mask) {
        const int f = table.value(mask);
        const int wt = std::popcount(mask);
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) tally[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(wt - 1)] += f;
            else tally[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(wt)] -= f;
        }
    }
    return tally;
}

void check_integer(const Rational& v) {
    if (!v.is_integer()) throw Error(ErrorKind::NonIntegerWeights, "value " + v.str() + " is not an integer");
}

} // namespace

SemivalueVector semivalues_from_table(const TruthTable& table, const ProbabilityVector& p) {
    const int n = table.size();
    require_same_size(n, p.size());
    const auto tally = pivot_tally(table);
    SemivalueVector out;
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational v;
        for (int t = 0; t < n; ++t) {
            const std::int64_t c = tally[static_cast<std::size_t>(i * n + t)];
            if (c != 0) v += p.at(t) * Rational(c);
        }
        out.values[static_cast<std::size_t>(i)] = std::move(v);
    }
    return out;
}

SemivalueVector semivalues_bruteforce(const WeightedGame& g, const ProbabilityVector& p, int cap) {
    require_same_size(g.size(), p.size());
    return semivalues_from_table(truth_table_exact(g, cap), p);
}

SemivalueVector semivalues_pivot_dp(const IntegerGame& g, const ProbabilityVector& p, int jobs) {
    const int n = g.size();
    require_same_size(n, p.size());
    std::int64_t total = 0;
    for (std::int64_t w : g.weights) total += w;

    std::vector<Rational> values(static_cast<std::size_t>(n));
    parallel_chunks(static_cast<std::size_t>(n), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        std::vector<std::int64_t> others;
        for (std::size_t i = begin; i < end; ++i) {
            others.clear();
            for (std::size_t j = 0; j < g.weights.size(); ++j) {
                if (j != i) others.push_back(g.weights[j]);
            }
            const CoalitionCountTable table(others);
            const std::int64_t wi = g.weights[i];
            Rational v;
            for (int t = 0; t < n; ++t) {
                if (p.at(t).is_zero()) continue;
                std::int64_t net = 0;
                const auto counts = table.row(t);
                for (std::size_t k = 0; k < counts.size(); ++k) {
                    if (counts[k] == 0) continue;
                    const std::int64_t s = table.min_sum() + static_cast<std::int64_t>(k);
                    // w . x = 2 * (weight of the +1 coalition) - W
                    const std::int64_t without = 2 * s - total - g.threshold;
                    const int delta = sign_of<std::int64_t>(without + 2 * wi, 0) - sign_of<std::int64_t>(without, 0);
                    net += delta * static_cast<std::int64_t>(counts[k]);
                }
                if (net != 0) v += p.at(t) * Rational(net);
            }
            values[i] = std::move(v);
        }
    });
    return SemivalueVector{std::move(values)};
}

SemivalueVector semivalues_pivot_dp(const WeightedGame& g, const ProbabilityVector& p,
                                    const PivotDpOptions& options) {
    require_same_size(g.size(), p.size());
    if (!options.allow_scaling) {
        for (const auto& w : g.weights) check_integer(w);
        check_integer(g.threshold);
    }
    const auto scaled = scale_to_integers(g);
    if (!scaled) throw Error(ErrorKind::WeightRangeOverflow, "scaled weights do not fit in 64 bits");
    return semivalues_pivot_dp(*scaled, p, options.jobs);
}

SemivalueVector semivalues(const WeightedGame& g, const ProbabilityVector& p, SemivalueMethod method, int cap) {
    if (method == SemivalueMethod::dp) return semivalues_pivot_dp(g, p);
    return semivalues_bruteforce(g, p, cap);
}

ReformulationTerms reformulation_terms(const TruthTable& table, const ProbabilityVector& p) {
    const int n = table.size();
    require_same_size(n, p.size());
    const auto un = static_cast<std::size_t>(n);
    // signed[i * (n+1) + wt] = sum over x of weight wt of f(x) x_i; plain[wt] = sum of f(x)
    std::vector<std::int64_t> correlated(un * (un + 1), 0);
    std::vector<std::int64_t> plain(un + 1, 0);
    for (std::uint64_t mask = 0; mask < table.points(); ++mask) {
        const int f = table.value(mask);
        const auto wt = static_cast<std::size_t>(std::popcount(mask));
        plain[wt] += f;
        for (std::size_t i = 0; i < un; ++i) correlated[i * (un + 1) + wt] += ((mask >> i) & 1U) ? f : -f;
    }
    ReformulationTerms terms;
    terms.hat.resize(un);
    for (std::size_t i = 0; i < un; ++i) {
        Rational h;
        for (int wt = 0; wt <= n; ++wt) {
            const std::int64_t c = correlated[i * (un + 1) + static_cast<std::size_t>(wt)];
            if (c != 0) h += mu_prime(p, wt) * Rational(c);
        }
        terms.hat[i] = std::move(h);
    }
    for (int wt = 0; wt <= n; ++wt) {
        const std::int64_t c = plain[static_cast<std::size_t>(wt)];
        if (c != 0) terms.cf += (p.at(wt - 1) - p.at(wt)) * Rational(c);
    }
    return terms;
}

ReformulationTerms reformulation_terms(const WeightedGame& g, const ProbabilityVector& p, int cap) {
    require_same_size(g.size(), p.size());
    return reformulation_terms(truth_table_exact(g, cap), p);
}

bool semivalues_match(const WeightedGame& g, const ProbabilityVector& p, const std::vector<Rational>& targets,
                      int cap) {
    if (static_cast<int>(targets.size()) != g.size()) {
        throw Error(ErrorKind::DimensionMismatch, "target vector length differs from the number of players");
    }
    return semivalues_bruteforce(g, p, cap).values == targets;
}

bool verify_semivalues(const WeightedGame& g, const ProbabilityVector& p, const std::vector<Rational>& targets,
                       int cap) {
    for (const auto& w : g.weights) {
        if (w.sign() < 0) {
            throw Error(ErrorKind::PreconditionViolated, "weighted voting games need nonnegative weights");
        }
    }
    return semivalues_match(g, p, targets, cap);
}

} // namespace svf
