// Acceptance gate: one line per criterion, exact equality throughout.
// Exit status is nonzero when any criterion fails.

#include "svf/inverse.hpp"
#include "svf/khintchine.hpp"
#include "svf/random.hpp"
#include "svf/reduction.hpp"
#include "svf/semivalue.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace svf;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::vector<Rational> ints(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

std::vector<Rational> entries(const ProbabilityVector& p) { return {p.entries().begin(), p.entries().end()}; }

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Outcome oracle_equivalence() {
    Rng rng(1001);
    int mismatches = 0;
    const auto start = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 12;
        const auto g = random_integer_game(n, -20, 20, rng);
        const auto p = random_probability_vector(n, rng);
        if (semivalues_pivot_dp(g, p) != semivalues_bruteforce(g, p)) ++mismatches;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {mismatches == 0 && seconds <= 300.0,
            "500 games n<=12 |w|<=20, " + std::to_string(mismatches) + " mismatches, " + std::to_string(seconds) + " s"};
}

Outcome reformulation_identity() {
    Rng rng(1002);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        const auto g = trial % 2 ? random_integer_game(n, -20, 20, rng) : random_rational_game(n, rng);
        const auto p = random_probability_vector(n, rng);
        const auto terms = reformulation_terms(g, p);
        const auto definition = oracle::semivalues(g.weights, g.threshold, entries(p));
        for (int i = 0; i < n; ++i) {
            if ((terms.hat[static_cast<std::size_t>(i)] + terms.cf) / Rational(2) != definition[static_cast<std::size_t>(i)]) {
                ++mismatches;
                break;
            }
        }
    }
    return {mismatches == 0, "200 games n<=10, " + std::to_string(mismatches) + " mismatches"};
}

Outcome fixed_points() {
    Outcome o;
    const auto maj3 = semivalues_pivot_dp(WeightedGame{ints({1, 1, 1}), Rational(0)}, preset_probability_vector("banzhaf", 3));
    if (maj3.values != ints({1, 1, 1}) || semivalues_bruteforce(WeightedGame{ints({1, 1, 1}), Rational(0)},
                                                                 preset_probability_vector("banzhaf", 3)) != maj3) {
        o = {false, "Maj3 Banzhaf is not (1,1,1); "};
    }
    const WeightedGame weighted{ints({2, 1, 1}), Rational(2)};
    const std::vector<Rational> expected{Rational(4, 3), Rational(1, 3), Rational(1, 3)};
    const auto shapley = preset_probability_vector("shapley", 3);
    if (semivalues_bruteforce(weighted, shapley).values != expected || semivalues_pivot_dp(weighted, shapley).values != expected) {
        o.passed = false;
        o.detail += "(2,1,1;2) Shapley is not (4/3,1/3,1/3); ";
    }
    Rng rng(1003);
    int dictator_failures = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 8;
        const auto p = random_probability_vector(n, rng);
        std::vector<Rational> w(static_cast<std::size_t>(n)), want(static_cast<std::size_t>(n));
        w[0] = Rational(1);
        want[0] = Rational(2);
        const WeightedGame g{w, Rational(0)};
        if (semivalues_bruteforce(g, p).values != want || semivalues_pivot_dp(g, p).values != want) ++dictator_failures;
    }
    if (dictator_failures) o.passed = false;
    o.detail += "Maj3, (2,1,1;2), dictator x20: " + std::to_string(dictator_failures) + " dictator failures";
    return o;
}

Outcome reduction_pipeline() {
    Outcome o;
    const RPartitionInstance worked{{1, 1, 2}, 1};
    const auto banzhaf5 = preset_probability_vector("banzhaf", 5);
    const Rational worked_prob = partition_probability(reduce_rpartition_to_partition(worked).weights, banzhaf5);
    const Rational worked_count = recover_count_from_partition_prob(worked_prob, banzhaf5, 1, 3);
    if (worked_prob != Rational(5, 31) || worked_count != Rational(2)) {
        o.passed = false;
        o.detail = "c=(1,1,2) gave Pr=" + worked_prob.str() + " count=" + worked_count.str() + "; ";
    }
    Rng rng(1004);
    int mismatches = 0;
    int runs = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 9;
        const auto inst = random_promise_instance(n, 6, rng);
        if (!check_rpartition_promise(inst).holds) ++mismatches;
        const Rational expected(oracle::half_sum_subsets(inst.c));
        const auto red = reduce_rpartition_to_partition(inst);
        std::vector<ProbabilityVector> ps{preset_probability_vector("banzhaf", n + 2), preset_probability_vector("shapley", n + 2)};
        for (int i = 0; i < 5; ++i) ps.push_back(random_reasonable_vector(n + 2, rng));
        for (const auto& p : ps) {
            ++runs;
            if (recover_count_from_partition_prob(partition_probability(red.weights, p), p, inst.k, n) != expected) ++mismatches;
        }
    }
    if (mismatches) o.passed = false;
    o.detail += "c=(1,1,2) -> 5/31 -> 2; 100 instances n<=10 x 7 vectors = " + std::to_string(runs) + " runs, " +
                std::to_string(mismatches) + " mismatches";
    return o;
}

Outcome triple_identities() {
    Rng rng(1005);
    const Rational y(1, 4);
    int case_failures = 0, aggregate_failures = 0, recovery_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 8;
        const auto a = random_special_form(n, 6, rng);
        const auto triple = build_khintchine_triple(a, y);
        if (!check_triple_cases(triple).ok()) ++case_failures;
        const auto p = random_probability_vector(n + 2, rng);
        const Rational kc = khintchine(triple.c, p).value;
        const Rational kd = khintchine(triple.d, p).value;
        const Rational ke = khintchine(triple.e, p).value;
        if (kd + ke - kc != Rational(2) * y * interior_zero_probability(triple.c, p)) ++aggregate_failures;
        if (recover_prob_from_khintchine(kd, ke, kc, y, p) != partition_probability(scale_vector_to_integers(a).values, p)) {
            ++recovery_failures;
        }
    }
    return {case_failures + aggregate_failures + recovery_failures == 0,
            "100 special-form vectors n+2<=10, y=1/4: case/aggregate/recovery failures " + std::to_string(case_failures) + "/" +
                std::to_string(aggregate_failures) + "/" + std::to_string(recovery_failures)};
}

Outcome tightness() {
    Outcome o;
    const auto worked = optimize_over_polytope(ints({1, 1, -1, -1}), preset_probability_vector("banzhaf", 4), PolytopeMode::closed_form);
    if (worked.value != Rational(3)) {
        o.passed = false;
        o.detail = "a=(1,1,-1,-1) optimum " + worked.value.str() + "; ";
    }
    Rng rng(1006);
    int violations = 0, unattained = 0;
    std::uint64_t vertices = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const auto a = random_special_form(n, 6, rng);
        const auto p = trial % 3 == 0 ? preset_probability_vector(trial % 2 ? "shapley" : "banzhaf", n + 2)
                                      : random_probability_vector(n + 2, rng);
        const auto best = optimize_over_polytope(a, p, PolytopeMode::closed_form);
        if (inner(a, oracle::semivalues(best.witness.weights, best.witness.threshold, entries(p))) != best.value) ++unattained;
        for (const auto& v : enumerate_polytope_vertices(p, 3)) {
            ++vertices;
            if (inner(a, v.vertex.values) > best.value) ++violations;
        }
    }
    if (violations || unattained) o.passed = false;
    o.detail += "a=(1,1,-1,-1) -> 3; 40 objectives n+2<=6 over " + std::to_string(vertices) + " vertices: " +
                std::to_string(violations) + " exceed, " + std::to_string(unattained) + " witnesses miss";
    return o;
}

Outcome transfer() {
    Rng rng(1007);
    int identity_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 8;
        const auto a = random_special_form(n, 6, rng);
        const auto p = random_probability_vector(n + 2, rng);
        const auto f = oracle::semivalues(a, Rational(0), entries(p));
        const auto inst = pton_transform(a, f, p);
        const auto g = oracle::semivalues(inst.game.weights, Rational(0), entries(p));
        const auto shifts = pton_shifts(p);
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && g[static_cast<std::size_t>(i)] == f[static_cast<std::size_t>(i)] - shifts.first;
        for (int i = n; i < n + 2; ++i) ok = ok && g[static_cast<std::size_t>(i)] == f[static_cast<std::size_t>(i)] + shifts.tail;
        if (!ok) ++identity_failures;
    }

    // every (instance, targets) pair drawn from the special-form grid with heads in [1,3]^n
    int verdict_failures = 0;
    std::uint64_t pairs = 0, yes = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<Rational>> heads{{}};
        for (int i = 0; i < n; ++i) {
            std::vector<std::vector<Rational>> next;
            for (const auto& h : heads) {
                for (int v = 1; v <= 3; ++v) {
                    auto e = h;
                    e.emplace_back(v);
                    next.push_back(std::move(e));
                }
            }
            heads = std::move(next);
        }
        for (const auto& p : {preset_probability_vector("banzhaf", n + 2), preset_probability_vector("shapley", n + 2),
                              random_probability_vector(n + 2, rng)}) {
            std::vector<std::vector<Rational>> forms, values;
            for (const auto& h : heads) {
                forms.push_back(special_form_from_head(h));
                values.push_back(semivalues_bruteforce(WeightedGame{forms.back(), Rational(0)}, p).values);
            }
            for (std::size_t i = 0; i < forms.size(); ++i) {
                for (std::size_t j = 0; j < forms.size(); ++j) {
                    for (int perturb = 0; perturb < 2; ++perturb) {
                        auto targets = values[j];
                        if (perturb) targets[0] += Rational(1, 7);
                        const bool before = values[i] == targets;
                        const auto inst = pton_transform(forms[i], targets, p);
                        const bool after = verify_semivalues(inst.game, p, inst.targets);
                        ++pairs;
                        yes += before;
                        if (before != after) ++verdict_failures;
                    }
                }
            }
        }
    }
    return {identity_failures + verdict_failures == 0,
            "identities on 100 (a,p) n+2<=10: " + std::to_string(identity_failures) + " failures; verdicts on " +
                std::to_string(pairs) + " pairs n+2<=6 (" + std::to_string(yes) + " YES): " + std::to_string(verdict_failures) +
                " changed"};
}

Outcome census() {
    Rng rng(1008);
    std::uint64_t games = 0, pairs = 0, counterexamples = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i < 5; ++i) {
            const auto report = uniqueness_census(n, 2, random_probability_vector(n, rng));
            games += report.games;
            pairs += report.pairs_compared;
            counterexamples += report.counterexamples;
        }
    }
    return {counterexamples == 0, "bound 2, n<=5, 5 vectors each: " + std::to_string(games) + " games, " + std::to_string(pairs) +
                                      " same-group pairs, " + std::to_string(counterexamples) + " counterexamples"};
}

Outcome inverse_soundness() {
    Outcome o;
    int unsound = 0;
    std::uint64_t found = 0;
    auto solve = [&](const InverseInstance& inst) {
        auto r = inverse_exact(inst, 3);
        if (r.status == InverseStatus::found) {
            ++found;
            if (!verify_semivalues(WeightedGame{r.weights, inst.theta}, inst.pvec, inst.targets)) ++unsound;
        }
        return r;
    };
    const auto banzhaf = preset_probability_vector("banzhaf", 3);
    if (solve({ints({1, 1, 1}), Rational(0), banzhaf}).status != InverseStatus::found) {
        o.passed = false;
        o.detail += "Maj3 not recovered; ";
    }
    if (solve({ints({2, 0, 0}), Rational(0), banzhaf}).status != InverseStatus::found) {
        o.passed = false;
        o.detail += "dictator not recovered; ";
    }
    Rng rng(1009);
    int disagreements = 0;
    const InverseOracle oracle_fn = solve;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 4;
        const auto p = random_probability_vector(n, rng);
        WeightedGame g;
        int total = 0;
        for (int i = 0; i < n; ++i) {
            const int w = uniform_int(rng, i == 0 ? 1 : 0, 3);
            total += w;
            g.weights.emplace_back(w);
        }
        g.threshold = Rational(mpz_class(uniform_int(rng, -2 * total, 2 * total)), mpz_class(2));
        auto targets = semivalues_bruteforce(g, p).values;
        if (trial % 2) targets[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))] += Rational(1, uniform_int(rng, 2, 9));
        if (verification_via_inverse(g, targets, p, oracle_fn) != verify_semivalues(g, p, targets)) ++disagreements;
    }
    if (unsound || disagreements) o.passed = false;
    o.detail += "Maj3 and dictator recovered; " + std::to_string(found) + " found results, " + std::to_string(unsound) +
                " fail to verify; 200 instances, " + std::to_string(disagreements) + " disagreements";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence (pivot DP vs brute force)", oracle_equivalence},
        {"reformulation identity", reformulation_identity},
        {"fixed points", fixed_points},
        {"counting reduction pipeline", reduction_pipeline},
        {"Khintchine triple identities", triple_identities},
        {"polytope tightness", tightness},
        {"positive-weight transfer", transfer},
        {"uniqueness census", census},
        {"inverse soundness", inverse_soundness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.passed;
        std::printf("criterion %zu %s %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
