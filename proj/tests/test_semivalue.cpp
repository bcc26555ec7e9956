#include "svf/coalition_table.hpp"
#include "svf/random.hpp"
#include "svf/semivalue.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <bit>

using namespace svf;
using testing::error_kind;
using testing::ints;

TEST_CASE("coalition count table matches subset enumeration") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = uniform_int(rng, 0, 9);
        std::vector<std::int64_t> w(static_cast<std::size_t>(n));
        for (auto& v : w) v = uniform_int(rng, -6, 6);
        const CoalitionCountTable table(w);
        std::vector<std::vector<std::uint64_t>> expected(static_cast<std::size_t>(n) + 1,
                                                         std::vector<std::uint64_t>(200, 0));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::int64_t s = 0;
            for (int i = 0; i < n; ++i) {
                if ((mask >> i) & 1U) s += w[static_cast<std::size_t>(i)];
            }
            ++expected[static_cast<std::size_t>(std::popcount(mask))][static_cast<std::size_t>(s + 100)];
        }
        for (int t = 0; t <= n; ++t) {
            for (std::int64_t s = -100; s < 100; ++s) {
                REQUIRE(table.count(t, s) == expected[static_cast<std::size_t>(t)][static_cast<std::size_t>(s + 100)]);
            }
        }
    }
}

TEST_CASE("brute force and pivot DP agree with the oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = uniform_int(rng, 1, 9);
        const auto g = random_integer_game(n, -20, 20, rng);
        const auto p = random_probability_vector(n, rng);
        const auto expected = oracle::semivalues(g.weights, g.threshold, testing::entries_of(p));
        REQUIRE(semivalues_bruteforce(g, p).values == expected);
        REQUIRE(semivalues_pivot_dp(g, p).values == expected);
        REQUIRE(semivalues_pivot_dp(g, p, PivotDpOptions{true, 3}).values == expected);
    }
}

TEST_CASE("rational weights go through scaling") {
    Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = uniform_int(rng, 1, 7);
        const auto g = random_rational_game(n, rng);
        const auto p = random_probability_vector(n, rng);
        REQUIRE(semivalues_pivot_dp(g, p) == semivalues_bruteforce(g, p));
        REQUIRE(semivalues(g, p, SemivalueMethod::dp) == semivalues(g, p, SemivalueMethod::brute));
    }
    const WeightedGame half{{Rational(1, 2)}, Rational(0)};
    CHECK(error_kind([&] { (void)semivalues_pivot_dp(half, preset_probability_vector("banzhaf", 1), PivotDpOptions{false, 1}); }) ==
          ErrorKind::NonIntegerWeights);
}

TEST_CASE("worked fixed points") {
    CHECK(semivalues_bruteforce({ints({1, 1, 1}), Rational(0)}, preset_probability_vector("banzhaf", 3)).values ==
          ints({1, 1, 1}));
    CHECK(semivalues_pivot_dp({ints({2, 1, 1}), Rational(2)}, preset_probability_vector("shapley", 3)).values ==
          std::vector<Rational>{Rational(4, 3), Rational(1, 3), Rational(1, 3)});
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = uniform_int(rng, 1, 8);
        std::vector<Rational> w(static_cast<std::size_t>(n));
        w[0] = Rational(1);
        std::vector<Rational> expected(static_cast<std::size_t>(n));
        expected[0] = Rational(2);
        CHECK(semivalues_bruteforce({w, Rational(0)}, random_probability_vector(n, rng)).values == expected);
    }
}

TEST_CASE("symmetry, null players and scaling") {
    Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = uniform_int(rng, 3, 8);
        auto g = random_integer_game(n, -6, 6, rng);
        g.weights[1] = g.weights[0];
        g.weights[static_cast<std::size_t>(n - 1)] = Rational(0);
        const auto p = random_probability_vector(n, rng);
        const auto s = semivalues_pivot_dp(g, p);
        CHECK(s.values[0] == s.values[1]);
        CHECK(s.values[static_cast<std::size_t>(n - 1)].is_zero());
        const Rational c(mpz_class(uniform_int(rng, 1, 9)), mpz_class(uniform_int(rng, 1, 9)));
        WeightedGame scaled = g;
        for (auto& w : scaled.weights) w *= c;
        scaled.threshold *= c;
        CHECK(semivalues_bruteforce(scaled, p) == semivalues_bruteforce(g, p));
    }
}

TEST_CASE("reformulation identity") {
    Rng rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = uniform_int(rng, 1, 9);
        const auto g = random_rational_game(n, rng);
        const auto p = random_probability_vector(n, rng);
        const auto terms = reformulation_terms(g, p);
        const auto values = oracle::semivalues(g.weights, g.threshold, testing::entries_of(p));
        for (int i = 0; i < n; ++i) {
            REQUIRE((terms.hat[static_cast<std::size_t>(i)] + terms.cf) / Rational(2) == values[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("verification") {
    const auto p = preset_probability_vector("banzhaf", 3);
    const WeightedGame maj3{ints({1, 1, 1}), Rational(0)};
    CHECK(verify_semivalues(maj3, p, ints({1, 1, 1})));
    CHECK_FALSE(verify_semivalues(maj3, p, ints({1, 1, 2})));
    CHECK(error_kind([&] { (void)verify_semivalues(maj3, p, ints({1, 1})); }) == ErrorKind::DimensionMismatch);
    CHECK(error_kind([&] { (void)verify_semivalues({ints({1, -1, 1}), Rational(0)}, p, ints({1, 1, 1})); }) ==
          ErrorKind::PreconditionViolated);
    CHECK(error_kind([&] { (void)semivalues_bruteforce(maj3, preset_probability_vector("banzhaf", 4)); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("limits") {
    const auto p = preset_probability_vector("banzhaf", 2);
    const WeightedGame wide{{Rational(mpz_class(mpz_class(1) << 40)), Rational(1)}, Rational(0)};
    CHECK(error_kind([&] { (void)semivalues_pivot_dp(wide, p); }) == ErrorKind::WeightRangeOverflow);
    CHECK(semivalues_bruteforce(wide, p).values == ints({2, 0}));
    std::vector<Rational> many(21, Rational(1));
    CHECK(error_kind([&] { (void)semivalues_bruteforce({many, Rational(0)}, preset_probability_vector("banzhaf", 21)); }) ==
          ErrorKind::InstanceTooLarge);
    // the DP has no exponential cap
    std::vector<Rational> thirty(30, Rational(1));
    const auto s = semivalues_pivot_dp({thirty, Rational(0)}, preset_probability_vector("shapley", 30));
    CHECK(s.values[0] == Rational(1, 15));
}
