#include "svf/random.hpp"
#include "svf/reduction.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace svf;
using testing::error_kind;
using testing::ints;

TEST_CASE("worked #R-Partition instance") {
    const RPartitionInstance inst{{1, 1, 2}, 1};
    const auto promise = check_rpartition_promise(inst);
    CHECK(promise.holds);
    CHECK(promise.k_in_range);
    CHECK(promise.count == 2);
    const auto red = reduce_rpartition_to_partition(inst);
    CHECK(red.weights == std::vector<std::int64_t>{1, 1, 2, -2, -2});
    CHECK(red.scale == 1);
    const auto p = preset_probability_vector("banzhaf", 5);
    const Rational prob = partition_probability(red.weights, p);
    CHECK(prob == Rational(5, 31));
    CHECK(recover_count_from_partition_prob(prob, p, 1, 3) == Rational(2));
}

TEST_CASE("reduction shapes") {
    // even total: no doubling
    CHECK(reduce_rpartition_to_partition({{1, 1}, 1}).weights == std::vector<std::int64_t>{1, 1, -1, -1});
    const auto odd = reduce_rpartition_to_partition({{1, 2}, 1});
    CHECK(odd.scale == 2);
    CHECK(odd.weights == std::vector<std::int64_t>{2, 4, -3, -3});
    CHECK(check_rpartition_promise({{1, 2}, 1}).count == 0);
    CHECK(check_rpartition_promise({{1, 2}, 1}).holds);
    CHECK(error_kind([] { (void)reduce_rpartition_to_partition({{1, 0}, 1}); }) == ErrorKind::BadInstance);
    CHECK(error_kind([] { (void)reduce_rpartition_to_partition({{}, 0}); }) == ErrorKind::BadInstance);
    CHECK(error_kind([] { (void)check_rpartition_promise({{1, 1}, 1}, PromiseBounds{Rational(0), Rational(1, 2)}); }) ==
          ErrorKind::PreconditionViolated);
    // {1,1,1,1,2,2}: half-sums use 2, 3 and 4 integers, so k = 2 fails the promise
    CHECK_FALSE(check_rpartition_promise({{1, 1, 1, 1, 2, 2}, 2}).holds);
}

TEST_CASE("recovery rejects degenerate p") {
    // all mass on size 0: classes k, k+1, n-k, n-k+1 carry nothing
    std::vector<Rational> e(5, Rational(0));
    e[0] = Rational(1);
    const auto p = make_probability_vector(e);
    CHECK(error_kind([&] { (void)recover_count_from_partition_prob(Rational(0), p, 1, 3); }) == ErrorKind::DegenerateDenominator);
    CHECK(error_kind([&] { (void)recover_count_from_partition_prob(Rational(0), p, 1, 4); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("end-to-end pipeline on random promise instances") {
    Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = uniform_int(rng, 2, 8);
        const auto inst = random_promise_instance(n, 6, rng);
        const auto expected = oracle::half_sum_subsets(inst.c);
        REQUIRE(check_rpartition_promise(inst).count == expected);
        const auto red = reduce_rpartition_to_partition(inst);
        for (const auto& p : {preset_probability_vector("banzhaf", n + 2), preset_probability_vector("shapley", n + 2),
                              random_reasonable_vector(n + 2, rng)}) {
            REQUIRE(recover_count_from_partition_prob(partition_probability(red.weights, p), p, inst.k, n) ==
                    Rational(expected));
        }
    }
}

TEST_CASE("special form") {
    CHECK_FALSE(is_special_form(ints({1, 2, -3, -3})));
    CHECK(special_form_from_head(ints({1, 2})) == std::vector<Rational>{Rational(1), Rational(2), Rational(-3, 2), Rational(-3, 2)});
    CHECK(is_special_form(special_form_from_head(ints({1, 2}))));
    CHECK(require_special_form(special_form_from_head(ints({4}))) == 1);
    CHECK(error_kind([] { (void)require_special_form(ints({1, -1})); }) == ErrorKind::BadShape);
    CHECK(error_kind([] { (void)require_special_form(ints({1, 0, -1, -1})); }) == ErrorKind::BadShape);
}

TEST_CASE("Khintchine triple identities") {
    Rng rng(59);
    const Rational y(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = uniform_int(rng, 1, 6);
        const auto a = random_special_form(n, 6, rng);
        const auto triple = build_khintchine_triple(a, y);
        REQUIRE(check_triple_cases(triple).ok());
        const auto p = random_probability_vector(n + 2, rng);
        const auto pe = testing::entries_of(p);
        const Rational kc = oracle::khintchine(triple.c, pe);
        const Rational kd = oracle::khintchine(triple.d, pe);
        const Rational ke = oracle::khintchine(triple.e, pe);
        REQUIRE(kd + ke - kc == Rational(2) * y * interior_zero_probability(triple.c, p));
        REQUIRE(recover_prob_from_khintchine(kd, ke, kc, y, p) == oracle::zero_probability(a, pe));
    }
    CHECK(error_kind([] { (void)build_khintchine_triple(special_form_from_head(ints({1})), Rational(1, 2)); }) == ErrorKind::BadY);
    CHECK(error_kind([] { (void)build_khintchine_triple(special_form_from_head({Rational(1, 2)}), Rational(1, 4)); }) ==
          ErrorKind::BadY);
}

TEST_CASE("polytope optimum") {
    const auto a = ints({1, 1, -1, -1});
    const auto banzhaf = preset_probability_vector("banzhaf", 4);
    const auto closed = optimize_over_polytope(a, banzhaf, PolytopeMode::closed_form);
    CHECK(closed.value == Rational(3));
    CHECK(closed.witness == WeightedGame{a, Rational(0)});
    const auto vertex = optimize_over_polytope(a, banzhaf, PolytopeMode::vertex_enum, 3);
    CHECK(vertex.value == Rational(3));
    CHECK(vertex.vertices_examined >= 1);

    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = uniform_int(rng, 1, 4);
        const auto obj = random_special_form(n, 5, rng);
        const auto p = random_probability_vector(n + 2, rng);
        const auto best = optimize_over_polytope(obj, p, PolytopeMode::closed_form);
        Rational attained;
        for (std::size_t i = 0; i < obj.size(); ++i) attained += obj[i] * best.witness_semivalues.values[i];
        CHECK(attained == best.value);
        for (const auto& v : enumerate_polytope_vertices(p, 3, 2)) {
            Rational value;
            for (std::size_t i = 0; i < obj.size(); ++i) value += obj[i] * v.vertex.values[i];
            REQUIRE(value <= best.value);
        }
    }
    CHECK(error_kind([] { (void)enumerate_polytope_vertices(preset_probability_vector("banzhaf", 9), 2, 1); }) ==
          ErrorKind::InstanceTooLarge);
}

TEST_CASE("vertex enumeration is deterministic across job counts") {
    const auto p = preset_probability_vector("shapley", 5);
    const auto one = enumerate_polytope_vertices(p, 3, 1);
    const auto four = enumerate_polytope_vertices(p, 3, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].game == four[i].game);
        CHECK(one[i].vertex == four[i].vertex);
    }
}

TEST_CASE("membership certificates") {
    const auto p = preset_probability_vector("banzhaf", 4);
    const WeightedGame g{special_form_from_head(ints({1, 2})), Rational(0)};
    const auto v = semivalues_bruteforce(g, p).values;
    CaratheodoryCertificate cert{v, {v}, {g}, {Rational(1)}};
    CHECK(verify_membership_certificate(cert, p));
    auto wrong_point = cert;
    wrong_point.point[0] += Rational(1);
    CHECK_FALSE(verify_membership_certificate(wrong_point, p));
    auto negative = cert;
    negative.vertices.push_back(v);
    negative.witnesses.push_back(g);
    negative.lambdas = {Rational(2), Rational(-1)};
    CHECK_FALSE(verify_membership_certificate(negative, p));
    auto bad_shape = cert;
    bad_shape.witnesses[0].threshold = Rational(1);
    CHECK(error_kind([&] { (void)verify_membership_certificate(bad_shape, p); }) == ErrorKind::ShapeViolation);
    auto too_many = cert;
    for (int i = 0; i < 5; ++i) {
        too_many.vertices.push_back(v);
        too_many.witnesses.push_back(g);
        too_many.lambdas.push_back(Rational(0));
    }
    CHECK(error_kind([&] { (void)verify_membership_certificate(too_many, p); }) == ErrorKind::ArityMismatch);
    auto mismatched = cert;
    mismatched.lambdas.clear();
    CHECK(error_kind([&] { (void)verify_membership_certificate(mismatched, p); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("pton transfer") {
    Rng rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = uniform_int(rng, 1, 6);
        const auto a = random_special_form(n, 6, rng);
        const auto p = random_probability_vector(n + 2, rng);
        const auto pe = testing::entries_of(p);
        const auto f = oracle::semivalues(a, Rational(0), pe);
        std::vector<Rational> flipped = a;
        flipped[static_cast<std::size_t>(n)] = -flipped[static_cast<std::size_t>(n)];
        flipped[static_cast<std::size_t>(n + 1)] = -flipped[static_cast<std::size_t>(n + 1)];
        const auto g = oracle::semivalues(flipped, Rational(0), pe);
        const auto shifts = pton_shifts(p);
        for (int i = 0; i < n; ++i) REQUIRE(g[static_cast<std::size_t>(i)] == f[static_cast<std::size_t>(i)] - shifts.first);
        REQUIRE(g[static_cast<std::size_t>(n)] == f[static_cast<std::size_t>(n)] + shifts.tail);
        REQUIRE(g[static_cast<std::size_t>(n + 1)] == f[static_cast<std::size_t>(n + 1)] + shifts.tail);
        const auto inst = pton_transform(a, f, p);
        CHECK(inst.game.weights == flipped);
        CHECK(inst.targets == g);
    }
    CHECK(error_kind([] { (void)pton_transform(ints({1, 1}), ints({0, 0}), preset_probability_vector("banzhaf", 2)); }) ==
          ErrorKind::BadShape);
}
