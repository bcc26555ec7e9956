#include "svf/selftest.hpp"

#include "svf/cli.hpp"
#include "svf/errors.hpp"
#include "svf/game.hpp"
#include "svf/inverse.hpp"
#include "svf/kernels.hpp"
#include "svf/khintchine.hpp"
#include "svf/random.hpp"
#include "svf/reduction.hpp"
#include "svf/semivalue.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <unistd.h>

namespace svf {

bool SelftestReport::all_passed() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const SelftestEntry& e) { return e.passed; });
}

const SelftestEntry* SelftestReport::find(const std::string& name) const noexcept {
    for (const auto& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string join(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

std::vector<Rational> ints(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

std::vector<ProbabilityVector> sample_vectors(int n, Rng& rng, int random_count) {
    std::vector<ProbabilityVector> out{preset_probability_vector("banzhaf", n), preset_probability_vector("shapley", n)};
    for (int i = 0; i < random_count; ++i) out.push_back(random_probability_vector(n, rng));
    return out;
}

class Runner {
public:
    explicit Runner(const SelftestOptions& options) : options_(options), rng_(options.seed) {}

    void add(const std::string& name, const Check& check) {
        SelftestEntry entry{name, false, {}};
        try {
            entry.detail = check();
            entry.passed = entry.detail.empty();
        } catch (const std::exception& e) {
            entry.detail = std::string("threw: ") + e.what();
        }
        if (entry.passed) entry.detail = "ok";
        report_.entries.push_back(std::move(entry));
    }

    Rng& rng() { return rng_; }
    int max_n() const { return options_.max_n; }
    int jobs() const { return options_.jobs; }
    SelftestReport take() { return std::move(report_); }

private:
    SelftestOptions options_;
    Rng rng_;
    SelftestReport report_;
};

void game_checks(Runner& r) {
    r.add("game.presets_normalised", [&]() -> std::string {
        for (int n = 1; n <= r.max_n(); ++n) {
            for (const char* name : {"banzhaf", "shapley"}) {
                const auto p = preset_probability_vector(name, n);
                Rational total;
                for (int t = 0; t < n; ++t) total += Rational(binomial(n - 1, t)) * p.at(t);
                if (total != Rational(1)) return std::string(name) + " n=" + std::to_string(n) + " sums to " + total.str();
            }
        }
        return {};
    });
    r.add("game.mu_prime_sums_to_lambda", [&]() -> std::string {
        for (int n = 1; n <= r.max_n(); ++n) {
            for (const auto& p : sample_vectors(n, r.rng(), 3)) {
                const InducedDistribution mu(p);
                Rational mass;
                Rational prob;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    const Assignment x(n, mask);
                    const Rational q = mu.probability(x);
                    if (q.sign() < 0) return "negative probability at n=" + std::to_string(n);
                    mass += mu_prime(p, x);
                    prob += q;
                }
                if (mass != mu.lambda()) return "sum of mu' is " + mass.str() + ", Lambda is " + mu.lambda().str();
                if (prob != Rational(1)) return "mu sums to " + prob.str();
            }
        }
        return {};
    });
    r.add("game.eval_boundary", []() -> std::string {
        // x = (+1, -1) sits on the hyperplane of (1, 1; 0)
        const WeightedGame g{ints({1, 1}), Rational(0)};
        const int value = eval_game(g, Assignment(2, 0b01));
        if (value != 1) return "sign(0) evaluated to " + std::to_string(value);
        const auto table = truth_table(*scale_to_integers(g));
        if (table.value(0b01) != 1) return "kernel table disagrees on the boundary";
        return {};
    });
    r.add("game.scaling_invariance", [&]() -> std::string {
        const int n = std::min(r.max_n(), 8);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_rational_game(n, r.rng());
            const Rational c(mpz_class(uniform_int(r.rng(), 1, 9)), mpz_class(uniform_int(r.rng(), 1, 9)));
            WeightedGame scaled = g;
            for (auto& w : scaled.weights) w *= c;
            scaled.threshold *= c;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (eval_game(g, Assignment(n, mask)) != eval_game(scaled, Assignment(n, mask))) {
                    return "scaling by " + c.str() + " changed the value at mask " + std::to_string(mask);
                }
            }
        }
        return {};
    });
    r.add("game.kernel_matches_exact", [&]() -> std::string {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = uniform_int(r.rng(), 1, std::max(r.max_n(), 8));
            const auto g = random_integer_game(n, -20, 20, r.rng());
            if (truth_table(*scale_to_integers(g)) != truth_table_exact(g)) return "tables differ for n=" + std::to_string(n);
        }
        return {};
    });
    r.add("kernels.isa_equivalence", [&]() -> std::string {
        using namespace kernels;
        if (!isa_available(Isa::avx2)) return {};
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> low(64);
            std::vector<std::int64_t> high(static_cast<std::size_t>(uniform_int(r.rng(), 1, 37)));
            for (auto& v : low) v = uniform_int(r.rng(), -50, 50);
            for (auto& v : high) v = uniform_int(r.rng(), -50, 50);
            const std::int64_t threshold = uniform_int(r.rng(), -60, 60);
            std::vector<std::uint64_t> a(high.size()), b(high.size());
            threshold_words(high, low, threshold, a, Isa::scalar);
            threshold_words(high, low, threshold, b, Isa::avx2);
            if (a != b) return "threshold_words differs";
            std::vector<std::uint64_t> dst1(high.size()), src(high.size());
            for (std::size_t k = 0; k < src.size(); ++k) {
                src[k] = r.rng()();
                dst1[k] = r.rng()();
            }
            auto dst2 = dst1;
            kernels::add_words(dst1, src, Isa::scalar);
            kernels::add_words(dst2, src, Isa::avx2);
            if (dst1 != dst2) return "add_words differs";
        }
        return {};
    });
}

void semivalue_checks(Runner& r) {
    r.add("semivalue.fixed_points", [&]() -> std::string {
        const auto maj3 = semivalues_bruteforce(WeightedGame{ints({1, 1, 1}), Rational(0)},
                                                preset_probability_vector("banzhaf", 3));
        if (maj3.values != ints({1, 1, 1})) return "Maj3 Banzhaf gave " + join(maj3.values);
        const auto weighted = semivalues_bruteforce(WeightedGame{ints({2, 1, 1}), Rational(2)},
                                                    preset_probability_vector("shapley", 3));
        const std::vector<Rational> expected{Rational(4, 3), Rational(1, 3), Rational(1, 3)};
        if (weighted.values != expected) return "(2,1,1;2) Shapley gave " + join(weighted.values);
        return {};
    });
    r.add("semivalue.dp_matches_bruteforce", [&]() -> std::string {
        for (int trial = 0; trial < 60; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n() + 2);
            const auto g = random_integer_game(n, -20, 20, r.rng());
            const auto p = random_probability_vector(n, r.rng());
            const auto dp = semivalues_pivot_dp(g, p, PivotDpOptions{true, r.jobs()});
            const auto brute = semivalues_bruteforce(g, p);
            if (dp != brute) return "n=" + std::to_string(n) + ": dp " + join(dp.values) + " vs " + join(brute.values);
        }
        return {};
    });
    r.add("semivalue.reformulation_identity", [&]() -> std::string {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n());
            const auto g = random_rational_game(n, r.rng());
            const auto p = random_probability_vector(n, r.rng());
            const auto terms = reformulation_terms(g, p);
            const auto values = semivalues_bruteforce(g, p);
            for (int i = 0; i < n; ++i) {
                if ((terms.hat[static_cast<std::size_t>(i)] + terms.cf) / Rational(2) != values.values[static_cast<std::size_t>(i)]) {
                    return "player " + std::to_string(i) + " differs";
                }
            }
        }
        return {};
    });
    r.add("semivalue.symmetry", [&]() -> std::string {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = uniform_int(r.rng(), 2, std::min(r.max_n(), 8));
            auto g = random_integer_game(n, -5, 5, r.rng());
            const int i = uniform_int(r.rng(), 0, n - 1);
            int j = uniform_int(r.rng(), 0, n - 2);
            if (j >= i) ++j;
            g.weights[static_cast<std::size_t>(j)] = g.weights[static_cast<std::size_t>(i)];
            const auto s = semivalues_bruteforce(g, random_probability_vector(n, r.rng()));
            if (s.values[static_cast<std::size_t>(i)] != s.values[static_cast<std::size_t>(j)]) return "equal weights, unequal values";
        }
        return {};
    });
    r.add("semivalue.null_and_dictator", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n());
            const auto p = random_probability_vector(n, r.rng());
            WeightedGame dictator{std::vector<Rational>(static_cast<std::size_t>(n)), Rational(0)};
            dictator.weights[0] = Rational(1);
            std::vector<Rational> expected(static_cast<std::size_t>(n));
            expected[0] = Rational(2);
            const auto d = semivalues_bruteforce(dictator, p);
            if (d.values != expected) return "dictator gave " + join(d.values);
            auto g = random_integer_game(n, -6, 6, r.rng());
            const int null_player = uniform_int(r.rng(), 0, n - 1);
            g.weights[static_cast<std::size_t>(null_player)] = Rational(0);
            if (!semivalues_bruteforce(g, p).values[static_cast<std::size_t>(null_player)].is_zero()) {
                return "null player has a nonzero value";
            }
        }
        return {};
    });
    r.add("semivalue.scaling_invariance", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n());
            const auto g = random_rational_game(n, r.rng());
            const auto p = random_probability_vector(n, r.rng());
            const Rational c(mpz_class(uniform_int(r.rng(), 1, 7)), mpz_class(uniform_int(r.rng(), 1, 7)));
            WeightedGame scaled = g;
            for (auto& w : scaled.weights) w *= c;
            scaled.threshold *= c;
            if (semivalues_bruteforce(g, p) != semivalues_bruteforce(scaled, p)) return "scaling by " + c.str() + " changed the values";
        }
        return {};
    });
}

void khintchine_checks(Runner& r) {
    r.add("khintchine.dp_matches_bruteforce", [&]() -> std::string {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n() + 2);
            std::vector<Rational> a;
            std::vector<std::int64_t> w;
            for (int i = 0; i < n; ++i) {
                w.push_back(uniform_int(r.rng(), -20, 20));
                a.emplace_back(w.back());
            }
            const auto p = random_probability_vector(n, r.rng());
            if (khintchine(a, p, KhintchineMethod::dp).value != khintchine(a, p, KhintchineMethod::brute).value) {
                return "K differs on " + join(a);
            }
            if (partition_probability(w, p) != partition_probability_bruteforce(w, p)) return "Pr[w.x=0] differs on " + join(a);
        }
        return {};
    });
    r.add("khintchine.sign_invariance", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n());
            std::vector<Rational> a, neg;
            std::vector<std::int64_t> w, negw;
            for (int i = 0; i < n; ++i) {
                const int v = uniform_int(r.rng(), -9, 9);
                a.emplace_back(v);
                neg.emplace_back(-v);
                w.push_back(v);
                negw.push_back(-v);
            }
            const auto p = random_probability_vector(n, r.rng());
            if (khintchine(a, p).value != khintchine(neg, p).value) return "K(a) != K(-a)";
            if (partition_probability(w, p) != partition_probability(negw, p)) return "Pr differs under negation";
        }
        return {};
    });
    r.add("khintchine.permutation_invariance", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, std::min(r.max_n(), 8));
            std::vector<Rational> a;
            for (int i = 0; i < n; ++i) a.emplace_back(mpz_class(uniform_int(r.rng(), -9, 9)), mpz_class(uniform_int(r.rng(), 1, 3)));
            const auto p = random_probability_vector(n, r.rng());
            auto shuffled = a;
            std::shuffle(shuffled.begin(), shuffled.end(), r.rng());
            if (khintchine(a, p, KhintchineMethod::brute).value != khintchine(shuffled, p, KhintchineMethod::brute).value) {
                return "K changed under a permutation of " + join(a);
            }
        }
        return {};
    });
    r.add("khintchine.triangle", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, r.max_n());
            std::vector<Rational> a, b, sum;
            for (int i = 0; i < n; ++i) {
                a.emplace_back(uniform_int(r.rng(), -9, 9));
                b.emplace_back(uniform_int(r.rng(), -9, 9));
                sum.push_back(a.back() + b.back());
            }
            const auto p = random_probability_vector(n, r.rng());
            if (khintchine(sum, p).value > khintchine(a, p).value + khintchine(b, p).value) return "triangle inequality fails";
        }
        return {};
    });
}

void reduction_checks(Runner& r) {
    const int max_inner = std::max(2, r.max_n());  // players before the two tail coordinates
    r.add("reduction.rpartition_pipeline", [&, max_inner]() -> std::string {
        const RPartitionInstance worked{{1, 1, 2}, 1};
        const auto reduced = reduce_rpartition_to_partition(worked);
        const auto banzhaf = preset_probability_vector("banzhaf", 5);
        const Rational prob = partition_probability(reduced.weights, banzhaf);
        if (prob != Rational(5, 31)) return "worked instance gave Pr = " + prob.str();
        if (recover_count_from_partition_prob(prob, banzhaf, 1, 3) != Rational(2)) return "worked instance count is not 2";
        for (int trial = 0; trial < 30; ++trial) {
            const int n = uniform_int(r.rng(), 2, max_inner);
            const auto inst = random_promise_instance(n, 6, r.rng());
            const auto promise = check_rpartition_promise(inst);
            const auto red = reduce_rpartition_to_partition(inst);
            for (const auto& p : {preset_probability_vector("banzhaf", n + 2), preset_probability_vector("shapley", n + 2),
                                  random_reasonable_vector(n + 2, r.rng())}) {
                const Rational got = recover_count_from_partition_prob(partition_probability(red.weights, p), p, inst.k, n);
                if (got != Rational(promise.count)) {
                    return "c=" + join(std::vector<Rational>(inst.c.begin(), inst.c.end())) + " recovered " + got.str() +
                           ", expected " + std::to_string(promise.count);
                }
            }
        }
        return {};
    });
    r.add("reduction.triple_identities", [&, max_inner]() -> std::string {
        const Rational y(1, 4);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = uniform_int(r.rng(), 1, max_inner);
            const auto a = random_special_form(n, 6, r.rng());
            const auto triple = build_khintchine_triple(a, y);
            const auto cases = check_triple_cases(triple);
            if (!cases.ok()) return "case table fails for " + join(a);
            const auto p = random_probability_vector(n + 2, r.rng());
            const Rational kc = khintchine(triple.c, p).value;
            const Rational kd = khintchine(triple.d, p).value;
            const Rational ke = khintchine(triple.e, p).value;
            if (kd + ke - kc != Rational(2) * y * interior_zero_probability(triple.c, p)) return "aggregate identity fails for " + join(a);
            const auto scaled = scale_vector_to_integers(a);
            if (recover_prob_from_khintchine(kd, ke, kc, y, p) != partition_probability(scaled.values, p)) {
                return "recovered probability differs for " + join(a);
            }
        }
        return {};
    });
    r.add("reduction.tightness", [&]() -> std::string {
        const auto a = ints({1, 1, -1, -1});
        const auto banzhaf = preset_probability_vector("banzhaf", 4);
        if (optimize_over_polytope(a, banzhaf, PolytopeMode::closed_form).value != Rational(3)) return "a=(1,1,-1,-1) optimum is not 3";
        for (int trial = 0; trial < 6; ++trial) {
            const int n = uniform_int(r.rng(), 1, std::min(4, max_inner));
            const auto obj = random_special_form(n, 5, r.rng());
            const auto p = random_probability_vector(n + 2, r.rng());
            const auto best = optimize_over_polytope(obj, p, PolytopeMode::closed_form);
            Rational attained;
            for (std::size_t i = 0; i < obj.size(); ++i) attained += obj[i] * best.witness_semivalues.values[i];
            if (attained != best.value) return "witness does not attain the optimum";
            for (const auto& v : enumerate_polytope_vertices(p, 3, r.jobs())) {
                Rational value;
                for (std::size_t i = 0; i < obj.size(); ++i) value += obj[i] * v.vertex.values[i];
                if (value > best.value) return "a vertex exceeds the closed-form optimum";
            }
        }
        return {};
    });
    r.add("reduction.pton_identities", [&, max_inner]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, max_inner);
            const auto a = random_special_form(n, 6, r.rng());
            const auto p = random_probability_vector(n + 2, r.rng());
            const auto f = semivalues_bruteforce(WeightedGame{a, Rational(0)}, p);
            const auto inst = pton_transform(a, f.values, p);
            if (semivalues_bruteforce(inst.game, p).values != inst.targets) return "shifted targets miss for " + join(a);
        }
        return {};
    });
    r.add("reduction.pton_preserves_verdict", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, 4);
            const auto a = random_special_form(n, 4, r.rng());
            const auto b = random_special_form(n, 4, r.rng());
            const auto p = random_probability_vector(n + 2, r.rng());
            const WeightedGame f{a, Rational(0)};
            // targets from another special-form game: equal or not, both sides must agree
            auto targets = semivalues_bruteforce(WeightedGame{b, Rational(0)}, p).values;
            if (trial % 3 == 0) targets[0] += Rational(1, 7);
            const bool before = semivalues_match(f, p, targets);
            const auto inst = pton_transform(a, targets, p);
            if (before != verify_semivalues(inst.game, p, inst.targets)) return "verdict changed for " + join(a);
        }
        return {};
    });
    r.add("reduction.membership_certificate", [&]() -> std::string {
        const auto p = preset_probability_vector("banzhaf", 4);
        const WeightedGame g1{special_form_from_head(ints({1, 1})), Rational(0)};
        const WeightedGame g2{special_form_from_head(ints({2, 1})), Rational(0)};
        const auto v1 = semivalues_bruteforce(g1, p).values;
        const auto v2 = semivalues_bruteforce(g2, p).values;
        CaratheodoryCertificate cert;
        cert.vertices = {v1, v2};
        cert.witnesses = {g1, g2};
        cert.lambdas = {Rational(1, 3), Rational(2, 3)};
        for (std::size_t j = 0; j < v1.size(); ++j) cert.point.push_back(Rational(1, 3) * v1[j] + Rational(2, 3) * v2[j]);
        if (!verify_membership_certificate(cert, p)) return "valid certificate rejected";
        cert.lambdas = {Rational(1, 2), Rational(1, 2)};
        if (verify_membership_certificate(cert, p)) return "wrong lambdas accepted";
        return {};
    });
}

void inverse_checks(Runner& r) {
    r.add("inverse.recovers_known_games", []() -> std::string {
        const InverseInstance maj3{ints({1, 1, 1}), Rational(0), preset_probability_vector("banzhaf", 3)};
        const auto found = inverse_exact(maj3);
        if (found.status != InverseStatus::found) return "Maj3 not recovered";
        const InverseInstance dictator{ints({2, 0, 0}), Rational(0), preset_probability_vector("banzhaf", 3)};
        if (inverse_exact(dictator).status != InverseStatus::found) return "dictator not recovered";
        return {};
    });
    r.add("inverse.soundness", [&]() -> std::string {
        for (int trial = 0; trial < 15; ++trial) {
            const int n = uniform_int(r.rng(), 1, std::min(r.max_n(), 4));
            const auto p = random_probability_vector(n, r.rng());
            std::vector<Rational> w;
            Rational total;
            for (int i = 0; i < n; ++i) {
                w.emplace_back(uniform_int(r.rng(), 0, 3));
                total += w.back();
            }
            if (total.is_zero()) continue;
            const Rational theta(mpz_class(uniform_int(r.rng(), -n, n)), mpz_class(4));
            for (auto& v : w) v /= total;
            const auto targets = semivalues_bruteforce(WeightedGame{w, theta}, p).values;
            const auto result = inverse_exact(InverseInstance{targets, theta, p}, 3, r.jobs());
            if (result.status != InverseStatus::found) return "a game from the class was not found";
            if (!verify_semivalues(WeightedGame{result.weights, theta}, p, targets)) return "found result does not verify";
        }
        return {};
    });
    r.add("inverse.uniqueness_census", [&]() -> std::string {
        const int n = std::min(r.max_n(), 4);
        for (const auto& p : sample_vectors(n, r.rng(), 2)) {
            const auto census = uniqueness_census(n, 2, p);
            if (census.counterexamples != 0) return std::to_string(census.counterexamples) + " counterexamples";
        }
        return {};
    });
    r.add("inverse.verification_agreement", [&]() -> std::string {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = uniform_int(r.rng(), 1, 3);
            const auto p = random_probability_vector(n, r.rng());
            WeightedGame g;
            for (int i = 0; i < n; ++i) g.weights.emplace_back(uniform_int(r.rng(), 0, 3));
            g.threshold = Rational(uniform_int(r.rng(), -3, 3));
            auto targets = semivalues_bruteforce(g, p).values;
            if (trial % 2 == 1) targets[0] += Rational(1, 5);
            const InverseOracle oracle = [&](const InverseInstance& inst) { return inverse_exact(inst, 3); };
            bool any = false;
            for (const auto& w : g.weights) any = any || !w.is_zero();
            if (!any) continue;
            if (verification_via_inverse(g, targets, p, oracle) != verify_semivalues(g, p, targets)) return "verdicts disagree";
        }
        return {};
    });
}

void cli_checks(Runner& r) {
    r.add("cli.determinism_and_round_trip", []() -> std::string {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / ("svf-selftest-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const auto game = (dir / "game.json").string();
        std::ofstream(game) << R"({"weights":["2","1","1"],"theta":"2"})";
        auto invoke = [](const std::vector<std::string>& args, std::string& text) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            text = out.str();
            return code;
        };
        std::string first, second;
        const int c1 = invoke({"semivalues", "--game", game, "--pvec", "shapley"}, first);
        const int c2 = invoke({"semivalues", "--game", game, "--pvec", "shapley"}, second);
        std::string failure;
        if (c1 != 0 || c2 != 0 || first != second) failure = "semivalues output is not reproducible";
        if (failure.empty()) {
            const auto targets = (dir / "targets.json").string();
            std::ofstream(targets) << first;
            std::string verdict;
            if (invoke({"verify", "--game", game, "--targets", targets, "--pvec", "shapley"}, verdict) != 0) {
                failure = "semivalues output did not verify against its own game";
            }
        }
        fs::remove_all(dir);
        return failure;
    });
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
    if (options.max_n < 1) throw Error(ErrorKind::UsageError, "selftest cap must be positive");
    Runner runner(options);
    game_checks(runner);
    semivalue_checks(runner);
    khintchine_checks(runner);
    reduction_checks(runner);
    inverse_checks(runner);
    cli_checks(runner);
    return runner.take();
}

} // namespace svf
