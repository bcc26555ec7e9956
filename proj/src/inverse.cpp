#include "svf/inverse.hpp"

#include "svf/errors.hpp"
#include "svf/parallel.hpp"

#include <bit>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace svf {

namespace {

// Upper bound on (candidates x 2^n) for any exhaustive scan.
constexpr std::uint64_t kMaxScanWork = std::uint64_t{1} << 32;

std::uint64_t checked_candidates(int n, int bound, std::uint64_t thresholds) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolated, "need at least one player");
    if (bound < 1) throw Error(ErrorKind::PreconditionViolated, "bound must be positive");
    if (n > 16) throw Error(ErrorKind::InstanceTooLarge, "game enumeration supports at most 16 players");
    std::uint64_t count = thresholds;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<std::uint64_t>(bound) + 1;
        if (count > kMaxScanWork) break;
    }
    if (count > kMaxScanWork || (count << n) > kMaxScanWork || (count << n) >> n != count) {
        throw Error(ErrorKind::InstanceTooLarge, "enumeration of " + std::to_string(n) + " players at bound " +
                                                     std::to_string(bound) + " exceeds the work limit");
    }
    return count / thresholds;
}

// Mixed-radix decode with the first coordinate most significant.
std::vector<std::int64_t> decode_weights(std::uint64_t index, int n, int bound) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    const auto radix = static_cast<std::uint64_t>(bound) + 1;
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % radix);
        index /= radix;
    }
    return w;
}

std::vector<Rational> normalised(const std::vector<std::int64_t>& w) {
    std::int64_t total = 0;
    for (auto v : w) total += v;
    std::vector<Rational> out;
    out.reserve(w.size());
    for (auto v : w) out.emplace_back(mpz_class(static_cast<long>(v)), mpz_class(static_cast<long>(total)));
    return out;
}

// Truth table of sign((w / sum w) . x - theta) for integer w.
TruthTable candidate_table(const std::vector<std::int64_t>& w, const Rational& theta) {
    std::int64_t total = 0;
    for (auto v : w) total += v;
    const mpz_class num = theta.numerator();
    const mpz_class den = theta.denominator();
    const mpz_class limit = mpz_class(1) << 40;
    if (::abs(num) < limit && den < limit) {
        IntegerGame g;
        const long d = den.get_si();
        for (auto v : w) g.weights.push_back(v * d);
        g.threshold = num.get_si() * total;
        return truth_table(g);
    }
    return truth_table_exact(WeightedGame{normalised(w), theta});
}

struct ScanHit {
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    Rational distance;
};

void require_instance_shape(const InverseInstance& inst) {
    if (static_cast<int>(inst.targets.size()) != inst.pvec.size()) {
        throw Error(ErrorKind::DimensionMismatch, "targets and probability vector differ in length");
    }
}

template <typename Visit>
void scan_candidates(const InverseInstance& inst, int bound, int jobs, Visit&& visit) {
    const int n = static_cast<int>(inst.targets.size());
    const std::uint64_t count = checked_candidates(n, bound, 1);
    parallel_chunks(static_cast<std::size_t>(count), jobs, [&](std::size_t begin, std::size_t end, std::size_t worker) {
        std::unordered_map<TruthTable, SemivalueVector, TruthTableHash> cache;
        for (std::size_t idx = std::max<std::size_t>(begin, 1); idx < end; ++idx) {
            const auto w = decode_weights(idx, n, bound);
            TruthTable table = candidate_table(w, inst.theta);
            auto it = cache.find(table);
            if (it == cache.end()) {
                auto values = semivalues_from_table(table, inst.pvec);
                it = cache.emplace(std::move(table), std::move(values)).first;
            }
            if (!visit(worker, static_cast<std::uint64_t>(idx), it->second)) break;
        }
    });
}

std::size_t worker_slots(int jobs) {
    return static_cast<std::size_t>(jobs < 1 ? 1 : jobs);
}

} // namespace

std::vector<CanonicalGame> enumerate_canonical_games(int n, int bound) {
    const auto thresholds = static_cast<std::uint64_t>(2 * n * bound + 1);
    const std::uint64_t weight_vectors = checked_candidates(n, bound, thresholds);
    std::vector<CanonicalGame> out;
    std::unordered_set<TruthTable, TruthTableHash> seen;
    const std::int64_t theta_span = static_cast<std::int64_t>(n) * bound;
    for (std::uint64_t idx = 0; idx < weight_vectors; ++idx) {
        const auto w = decode_weights(idx, n, bound);
        for (std::int64_t theta = -theta_span; theta <= theta_span; ++theta) {
            IntegerGame g{w, theta};
            TruthTable table = truth_table(g);
            if (seen.insert(table).second) out.push_back(CanonicalGame{std::move(g), std::move(table)});
        }
    }
    return out;
}

Rational distance(const std::vector<Rational>& u, const std::vector<Rational>& v, DistanceNorm norm) {
    if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "distance between vectors of different length");
    Rational d;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Rational diff = u[i] - v[i];
        d += norm == DistanceNorm::l1 ? abs(diff) : diff * diff;
    }
    return d;
}

InverseResult inverse_exact(const InverseInstance& inst, int bound, int jobs) {
    require_instance_shape(inst);
    const int n = static_cast<int>(inst.targets.size());
    std::vector<ScanHit> hits(worker_slots(jobs));
    scan_candidates(inst, bound, jobs, [&](std::size_t worker, std::uint64_t idx, const SemivalueVector& values) {
        if (values.values != inst.targets) return true;
        hits[worker].index = idx;
        return false;
    });
    ScanHit best;
    for (const auto& h : hits) {
        if (h.index < best.index) best = h;
    }
    InverseResult result;
    if (best.index == std::numeric_limits<std::uint64_t>::max()) {
        result.status = InverseStatus::no_solution_in_class;
        result.games_examined = checked_candidates(n, bound, 1) - 1;
        return result;
    }
    result.status = InverseStatus::found;
    result.weights = normalised(decode_weights(best.index, n, bound));
    result.games_examined = best.index;
    return result;
}

InverseResult inverse_nearest(const InverseInstance& inst, int bound, DistanceNorm norm, int jobs) {
    require_instance_shape(inst);
    const int n = static_cast<int>(inst.targets.size());
    std::vector<ScanHit> hits(worker_slots(jobs));
    scan_candidates(inst, bound, jobs, [&](std::size_t worker, std::uint64_t idx, const SemivalueVector& values) {
        Rational d = distance(values.values, inst.targets, norm);
        auto& h = hits[worker];
        if (h.index == std::numeric_limits<std::uint64_t>::max() || d < h.distance) {
            h.index = idx;
            h.distance = std::move(d);
        }
        return true;
    });
    std::optional<ScanHit> best;
    for (const auto& h : hits) {
        if (h.index == std::numeric_limits<std::uint64_t>::max()) continue;
        if (!best || h.distance < best->distance || (h.distance == best->distance && h.index < best->index)) best = h;
    }
    InverseResult result;
    result.games_examined = checked_candidates(n, bound, 1) - 1;
    if (!best) return result;
    result.status = best->distance.is_zero() ? InverseStatus::found : InverseStatus::nearest;
    result.weights = normalised(decode_weights(best->index, n, bound));
    result.distance = best->distance;
    return result;
}

InverseResult iterative_banzhaf_heuristic(const std::vector<Rational>& targets, const HeuristicOptions& options) {
    const int n = static_cast<int>(targets.size());
    if (n < 1) throw Error(ErrorKind::EmptyInput, "heuristic needs at least one target");
    for (const auto& t : targets) {
        if (t.sign() < 0) throw Error(ErrorKind::PreconditionViolated, "heuristic targets must be nonnegative");
    }
    if (options.iterations < 0) throw Error(ErrorKind::PreconditionViolated, "iterations must be nonnegative");
    if (options.step.sign() <= 0 || options.step > Rational(1)) {
        throw Error(ErrorKind::PreconditionViolated, "step must lie in (0, 1]");
    }
    const ProbabilityVector p = preset_probability_vector("banzhaf", n);
    const Rational lo(1, 2);
    const Rational hi(2);

    std::vector<Rational> w(static_cast<std::size_t>(n), Rational(1, n));
    std::vector<bool> ever_positive(static_cast<std::size_t>(n), false);
    InverseResult best;
    best.status = InverseStatus::nearest;
    std::uint64_t evaluated = 0;

    for (int iter = 0; iter <= options.iterations; ++iter) {
        const auto values = semivalues_from_table(truth_table(WeightedGame{w, options.theta}), p).values;
        ++evaluated;
        for (int i = 0; i < n; ++i) {
            if (values[static_cast<std::size_t>(i)].sign() != 0) ever_positive[static_cast<std::size_t>(i)] = true;
        }
        Rational d = distance(values, targets, DistanceNorm::l2);
        if (iter == 0 || d < best.distance) {
            best.weights = w;
            best.distance = std::move(d);
        }
        if (best.distance.is_zero() || iter == options.iterations) break;

        Rational total;
        for (int i = 0; i < n; ++i) {
            const auto& current = values[static_cast<std::size_t>(i)];
            const auto& target = targets[static_cast<std::size_t>(i)];
            Rational ratio;
            if (current.sign() > 0) ratio = target / current;
            else ratio = target.sign() > 0 ? hi : Rational(1);
            if (ratio < lo) ratio = lo;
            if (ratio > hi) ratio = hi;
            w[static_cast<std::size_t>(i)] *= Rational(1) + options.step * (ratio - Rational(1));
            total += w[static_cast<std::size_t>(i)];
        }
        for (auto& v : w) v /= total;
    }
    for (int i = 0; i < n; ++i) {
        if (targets[static_cast<std::size_t>(i)].sign() > 0 && !ever_positive[static_cast<std::size_t>(i)] &&
            options.iterations > 0) {
            throw Error(ErrorKind::ZeroSemivalueEncountered,
                        "player " + std::to_string(i) + " kept semivalue 0 against a positive target");
        }
    }
    best.games_examined = evaluated;
    if (best.distance.is_zero()) best.status = InverseStatus::found;
    return best;
}

UniquenessReport uniqueness_check(const WeightedGame& f, const WeightedGame& g, const ProbabilityVector& p, int cap) {
    if (f.size() != g.size() || f.size() != p.size()) {
        throw Error(ErrorKind::DimensionMismatch, "games and probability vector must share n");
    }
    Rational fs, gs;
    for (const auto& v : f.weights) fs += v;
    for (const auto& v : g.weights) gs += v;
    if (fs != gs) throw Error(ErrorKind::PreconditionViolated, "weight sums differ (" + fs.str() + " vs " + gs.str() + ")");
    if (f.threshold != g.threshold) throw Error(ErrorKind::PreconditionViolated, "thresholds differ");

    UniquenessReport report;
    report.f_values = semivalues_bruteforce(f, p, cap);
    report.g_values = semivalues_bruteforce(g, p, cap);
    report.hypothesis_met = report.f_values == report.g_values;
    if (!report.hypothesis_met) return report;

    const int n = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Assignment x(n, mask);
        if (mu_prime(p, x).is_zero()) continue;
        const Rational fm = dot(f.weights, x) - f.threshold;
        const Rational gm = dot(g.weights, x) - g.threshold;
        if ((abs(fm) + abs(gm)).is_zero()) continue;
        ++report.points_checked;
        if (sign_of(fm, Rational(0)) != sign_of(gm, Rational(0))) report.disagreements.push_back(x);
    }
    return report;
}

CensusReport uniqueness_census(int n, int bound, const ProbabilityVector& p) {
    if (p.size() != n) throw Error(ErrorKind::DimensionMismatch, "probability vector length differs from n");
    const auto thresholds = static_cast<std::uint64_t>(2 * n * bound + 1);
    const std::uint64_t weight_vectors = checked_candidates(n, bound, thresholds);
    const std::int64_t theta_span = static_cast<std::int64_t>(n) * bound;

    // support mask over assignments: weight classes with mu' > 0
    std::vector<bool> supported(static_cast<std::size_t>(n) + 1);
    for (int wt = 0; wt <= n; ++wt) supported[static_cast<std::size_t>(wt)] = !mu_prime(p, wt).is_zero();

    std::unordered_map<TruthTable, std::string, TruthTableHash> semivalue_key;
    std::map<std::string, TruthTable> representative;
    CensusReport report;
    for (std::uint64_t idx = 0; idx < weight_vectors; ++idx) {
        const auto w = decode_weights(idx, n, bound);
        std::int64_t total = 0;
        for (auto v : w) total += v;
        for (std::int64_t theta = -theta_span; theta <= theta_span; ++theta) {
            ++report.games;
            TruthTable table = truth_table(IntegerGame{w, theta});
            auto it = semivalue_key.find(table);
            if (it == semivalue_key.end()) {
                std::string key;
                for (const auto& v : semivalues_from_table(table, p).values) key += v.str() + ",";
                it = semivalue_key.emplace(table, std::move(key)).first;
            }
            const std::string group = std::to_string(total) + "|" + std::to_string(theta) + "|" + it->second;
            auto [rep, inserted] = representative.emplace(group, table);
            if (inserted) {
                ++report.groups;
                continue;
            }
            ++report.pairs_compared;
            for (std::uint64_t mask = 0; mask < table.points(); ++mask) {
                if (!supported[static_cast<std::size_t>(std::popcount(mask))]) continue;
                if (table.value(mask) != rep->second.value(mask)) {
                    ++report.counterexamples;
                    break;
                }
            }
        }
    }
    return report;
}

bool verification_via_inverse(const WeightedGame& instance, const std::vector<Rational>& targets,
                              const ProbabilityVector& p, const InverseOracle& oracle, int cap) {
    const int n = instance.size();
    if (n != p.size() || static_cast<int>(targets.size()) != n) {
        throw Error(ErrorKind::DimensionMismatch, "game, targets and probability vector must share n");
    }
    require_enumerable(n, cap);
    Rational total;
    for (const auto& v : instance.weights) {
        if (v.sign() < 0) throw Error(ErrorKind::PreconditionViolated, "verification instances need nonnegative weights");
        total += v;
    }
    if (total.sign() <= 0) throw Error(ErrorKind::PreconditionViolated, "weights must have a positive sum");

    const Rational theta_prime = instance.threshold / total;
    const InverseResult answer = oracle(InverseInstance{targets, theta_prime, p});
    if (answer.status != InverseStatus::found) return false;
    if (static_cast<int>(answer.weights.size()) != n) {
        throw Error(ErrorKind::DimensionMismatch, "inverse oracle returned a weight vector of the wrong length");
    }

    std::vector<Rational> scaled;
    scaled.reserve(instance.weights.size());
    for (const auto& v : instance.weights) scaled.push_back(v / total);
    const TruthTable ours = truth_table(WeightedGame{scaled, theta_prime}, cap);
    const TruthTable theirs = truth_table(WeightedGame{answer.weights, theta_prime}, cap);
    for (std::uint64_t mask = 0; mask < ours.points(); ++mask) {
        if (mu_prime(p, std::popcount(mask)).is_zero()) continue;
        if (ours.value(mask) != theirs.value(mask)) return false;
    }
    return true;
}

} // namespace svf
