#include "svf/reduction.hpp"

#include "svf/errors.hpp"
#include "svf/parallel.hpp"

#include <bit>
#include <unordered_set>

namespace svf {

PromiseReport check_rpartition_promise(const RPartitionInstance& inst, const PromiseBounds& bounds, int cap) {
    const int n = inst.size();
    if (n == 0) throw Error(ErrorKind::BadInstance, "#R-Partition instance needs at least one integer");
    if (bounds.b1.sign() <= 0 || bounds.b1 > bounds.b2 || bounds.b2 >= Rational(1)) {
        throw Error(ErrorKind::PreconditionViolated, "need 0 < b1 <= b2 < 1");
    }
    std::int64_t total = 0;
    for (std::int64_t v : inst.c) {
        if (v <= 0) throw Error(ErrorKind::BadInstance, "#R-Partition integers must be positive");
        if (v > (std::int64_t{1} << 40)) throw Error(ErrorKind::BadInstance, "#R-Partition integer too large");
        total += v;
    }
    require_enumerable(n, cap);

    PromiseReport report;
    const Rational rn(n);
    const Rational rk(inst.k);
    report.k_in_range = bounds.b1 * rn <= rk && rk <= bounds.b2 * rn;
    report.holds = true;
    if (total % 2 != 0) return report;

    const std::int64_t half = total / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) s += inst.c[static_cast<std::size_t>(i)];
        }
        if (s != half) continue;
        ++report.count;
        const int size = std::popcount(mask);
        if (size != inst.k && size != n - inst.k) report.holds = false;
    }
    return report;
}

PartitionReduction reduce_rpartition_to_partition(const RPartitionInstance& inst) {
    if (inst.c.empty()) throw Error(ErrorKind::BadInstance, "#R-Partition instance needs at least one integer");
    std::int64_t total = 0;
    for (std::int64_t v : inst.c) {
        if (v <= 0) throw Error(ErrorKind::BadInstance, "#R-Partition integers must be positive");
        if (v > (std::int64_t{1} << 40)) throw Error(ErrorKind::BadInstance, "#R-Partition integer too large");
        total += v;
    }
    PartitionReduction out;
    out.scale = total % 2 == 0 ? 1 : 2;
    for (std::int64_t v : inst.c) out.weights.push_back(out.scale * v);
    const std::int64_t tail = -(out.scale * total) / 2;
    out.weights.push_back(tail);
    out.weights.push_back(tail);
    return out;
}

Rational recover_count_from_partition_prob(const Rational& prob, const ProbabilityVector& p, int k, int n) {
    if (p.size() != n + 2) {
        throw Error(ErrorKind::DimensionMismatch, "recovery needs a probability vector over n + 2 players");
    }
    const Rational denominator = p.at(n - k + 1) + p.at(n - k) + p.at(k + 1) + p.at(k);
    if (denominator.is_zero()) {
        throw Error(ErrorKind::DegenerateDenominator,
                    "p gives no mass to weight classes k+1 and n-k+1; the reduction does not apply");
    }
    return (lambda_norm(p) * prob - (p.at(n + 1) + p.at(0))) / denominator;
}

bool is_special_form(const std::vector<Rational>& a) {
    if (a.size() < 3) return false;
    const std::size_t n = a.size() - 2;
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].sign() <= 0) return false;
        total += a[i];
    }
    const Rational tail = -total / Rational(2);
    return a[n] == tail && a[n + 1] == tail;
}

int require_special_form(const std::vector<Rational>& a) {
    if (!is_special_form(a)) {
        throw Error(ErrorKind::BadShape, "expected (a_1, ..., a_n, -A/2, -A/2) with a_i > 0 and A = sum a_i");
    }
    return static_cast<int>(a.size()) - 2;
}

std::vector<Rational> special_form_from_head(const std::vector<Rational>& head) {
    std::vector<Rational> out = head;
    Rational total;
    for (const auto& v : head) total += v;
    out.push_back(-total / Rational(2));
    out.push_back(-total / Rational(2));
    require_special_form(out);
    return out;
}

KhintchineTriple build_khintchine_triple(const std::vector<Rational>& a, const Rational& y) {
    const auto n = static_cast<std::size_t>(require_special_form(a));
    const Rational half(1, 2);
    if (!(y.sign() > 0 && y < half && half < a[0])) {
        throw Error(ErrorKind::BadY, "need 0 < y < 1/2 < a_1 (y = " + y.str() + ", a_1 = " + a[0].str() + ")");
    }
    KhintchineTriple triple;
    triple.y = y;
    triple.c.reserve(a.size());
    for (const auto& v : a) triple.c.push_back(v + v);
    triple.d = a;
    triple.e = a;
    triple.d[0] -= y;
    triple.e[0] += y;
    const Rational half_y = y / Rational(2);
    for (std::size_t i = n; i < n + 2; ++i) {
        triple.d[i] += half_y;
        triple.e[i] -= half_y;
    }
    return triple;
}

Rational recover_prob_from_khintchine(const Rational& kd, const Rational& ke, const Rational& kc, const Rational& y,
                                      const ProbabilityVector& p) {
    if (y.sign() <= 0) throw Error(ErrorKind::BadY, "y must be positive");
    const int last = p.size() - 1;
    return (kd + ke - kc) / (y + y) + (p.at(0) + p.at(last)) / lambda_norm(p);
}

TripleCaseReport check_triple_cases(const KhintchineTriple& triple, int cap) {
    const int m = static_cast<int>(triple.c.size());
    if (triple.d.size() != triple.c.size() || triple.e.size() != triple.c.size()) {
        throw Error(ErrorKind::DimensionMismatch, "triple vectors differ in length");
    }
    require_enumerable(m, cap);
    const Rational two_y = triple.y + triple.y;
    const std::uint64_t all_ones = (std::uint64_t{1} << m) - 1;
    TripleCaseReport report;
    for (std::uint64_t mask = 0; mask <= all_ones; ++mask) {
        const Assignment x(m, mask);
        const Rational cx = abs(dot(triple.c, x));
        const Rational dx = abs(dot(triple.d, x));
        const Rational ex = abs(dot(triple.e, x));
        ++report.points;
        if (mask == 0 || mask == all_ones) {
            if (!cx.is_zero() || !dx.is_zero() || !ex.is_zero()) ++report.constant_point_failures;
        } else if (!cx.is_zero()) {
            if (dx + ex != cx) ++report.nonzero_case_failures;
        } else if (x[m - 2] != x[m - 1]) {
            if (dx + ex != two_y) ++report.interior_zero_failures;
        } else {
            // a zero with equal tail signs off the constant points is outside the case table
            ++report.interior_zero_failures;
        }
    }
    return report;
}

std::vector<PolytopeVertex> enumerate_polytope_vertices(const ProbabilityVector& p, int bound, int jobs) {
    const int m = p.size();
    const int n = m - 2;
    if (n < 1) throw Error(ErrorKind::BadShape, "the polytope needs n + 2 >= 3 players");
    if (m > 8) throw Error(ErrorKind::InstanceTooLarge, "vertex enumeration supports n + 2 <= 8");
    if (bound < 1 || bound > 16) throw Error(ErrorKind::PreconditionViolated, "vertex bound must lie in [1, 16]");

    std::uint64_t candidates = 1;
    for (int i = 0; i < n; ++i) candidates *= static_cast<std::uint64_t>(bound);

    struct Candidate {
        std::vector<std::int64_t> head;
        TruthTable table;
    };
    std::vector<std::optional<Candidate>> computed(static_cast<std::size_t>(candidates));
    parallel_chunks(static_cast<std::size_t>(candidates), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            // first coordinate most significant, so index order is lexicographic
            std::vector<std::int64_t> head(static_cast<std::size_t>(n));
            std::size_t rest = idx;
            for (int i = n - 1; i >= 0; --i) {
                head[static_cast<std::size_t>(i)] = 1 + static_cast<std::int64_t>(rest % static_cast<std::size_t>(bound));
                rest /= static_cast<std::size_t>(bound);
            }
            IntegerGame doubled;
            std::int64_t total = 0;
            for (std::int64_t v : head) {
                doubled.weights.push_back(2 * v);
                total += v;
            }
            doubled.weights.push_back(-total);
            doubled.weights.push_back(-total);
            computed[idx] = Candidate{std::move(head), truth_table(doubled)};
        }
    });

    std::vector<PolytopeVertex> out;
    std::unordered_set<TruthTable, TruthTableHash> seen;
    for (auto& entry : computed) {
        if (!seen.insert(entry->table).second) continue;
        std::vector<Rational> head;
        for (std::int64_t v : entry->head) head.emplace_back(v);
        WeightedGame game{special_form_from_head(head), Rational(0)};
        out.push_back(PolytopeVertex{std::move(game), semivalues_from_table(entry->table, p)});
    }
    return out;
}

namespace {

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& c) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * c[i];
    return s;
}

} // namespace

PolytopeOptimum optimize_over_polytope(const std::vector<Rational>& a, const ProbabilityVector& p, PolytopeMode mode,
                                       int bound, int jobs, int cap) {
    require_special_form(a);
    if (static_cast<int>(a.size()) != p.size()) {
        throw Error(ErrorKind::DimensionMismatch, "objective and probability vector differ in length");
    }
    PolytopeOptimum best;
    if (mode == PolytopeMode::closed_form) {
        const Rational k = khintchine(a, p, KhintchineMethod::dp).value;
        best.value = lambda_norm(p) / Rational(2) * k;
        best.witness = WeightedGame{a, Rational(0)};
        if (p.size() <= cap) best.witness_semivalues = semivalues_bruteforce(best.witness, p, cap);
        return best;
    }
    const auto vertices = enumerate_polytope_vertices(p, bound, jobs);
    bool first = true;
    for (const auto& v : vertices) {
        const Rational value = inner(a, v.vertex.values);
        if (first || value > best.value) {
            best.value = value;
            best.witness = v.game;
            best.witness_semivalues = v.vertex;
            first = false;
        }
    }
    best.vertices_examined = vertices.size();
    return best;
}

bool verify_membership_certificate(const CaratheodoryCertificate& cert, const ProbabilityVector& p, int cap) {
    const std::size_t dim = cert.point.size();
    const std::size_t m = cert.vertices.size();
    if (dim < 3) throw Error(ErrorKind::ArityMismatch, "points live in dimension n + 2 >= 3");
    if (static_cast<int>(dim) != p.size()) {
        throw Error(ErrorKind::ArityMismatch, "point dimension differs from the probability vector length");
    }
    if (m == 0 || cert.witnesses.size() != m || cert.lambdas.size() != m) {
        throw Error(ErrorKind::ArityMismatch, "need equally many (>= 1) vertices, witnesses and lambdas");
    }
    if (m > dim + 1) {
        throw Error(ErrorKind::ArityMismatch, "a certificate uses at most n + 3 vertices");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (cert.vertices[i].size() != dim || cert.witnesses[i].weights.size() != dim) {
            throw Error(ErrorKind::ArityMismatch, "vertex or witness " + std::to_string(i) + " has the wrong length");
        }
        if (!is_special_form(cert.witnesses[i].weights) || !cert.witnesses[i].threshold.is_zero()) {
            throw Error(ErrorKind::ShapeViolation,
                        "witness " + std::to_string(i) + " is not a special-form game with threshold 0");
        }
    }

    Rational lambda_total;
    std::vector<Rational> combination(dim);
    for (std::size_t i = 0; i < m; ++i) {
        if (cert.lambdas[i].sign() < 0) return false;
        lambda_total += cert.lambdas[i];
        if (semivalues_bruteforce(cert.witnesses[i], p, cap).values != cert.vertices[i]) return false;
        for (std::size_t j = 0; j < dim; ++j) combination[j] += cert.lambdas[i] * cert.vertices[i][j];
    }
    return lambda_total == Rational(1) && combination == cert.point;
}

PtonShifts pton_shifts(const ProbabilityVector& p) {
    const int n = p.size() - 2;
    if (n < 1) throw Error(ErrorKind::BadShape, "transfer needs n + 2 >= 3 players");
    PtonShifts shifts;
    shifts.first = Rational(2) * (p.at(n + 1) - p.at(n - 1));
    Rational sum;
    for (int t = 0; t < n; ++t) sum += Rational(binomial(n, t)) * (p.at(t) + p.at(t + 1));
    shifts.tail = Rational(2) * sum;
    return shifts;
}

VerificationInstance pton_transform(const std::vector<Rational>& special_weights, const std::vector<Rational>& targets,
                                    const ProbabilityVector& p) {
    const auto n = static_cast<std::size_t>(require_special_form(special_weights));
    if (targets.size() != special_weights.size() || static_cast<int>(targets.size()) != p.size()) {
        throw Error(ErrorKind::DimensionMismatch, "weights, targets and probability vector must share n + 2");
    }
    const PtonShifts shifts = pton_shifts(p);
    VerificationInstance out;
    out.game.weights = special_weights;
    out.game.threshold = Rational(0);
    out.game.weights[n] = -special_weights[n];
    out.game.weights[n + 1] = -special_weights[n + 1];
    out.targets = targets;
    for (std::size_t i = 0; i < n; ++i) out.targets[i] -= shifts.first;
    out.targets[n] += shifts.tail;
    out.targets[n + 1] += shifts.tail;
    return out;
}

} // namespace svf
