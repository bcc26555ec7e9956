// Built against the library with the tie rule flipped to sign(0) = -1. The
// self-test has to notice.

#include "svf/game.hpp"
#include "svf/selftest.hpp"

#include <doctest.h>

static_assert(svf::kSignAtZero == -1, "this test must link the mutated library");

TEST_CASE("self-test rejects the flipped tie rule") {
    const auto report = svf::run_selftest();
    CHECK_FALSE(report.all_passed());
    for (const char* name : {"game.eval_boundary", "semivalue.fixed_points"}) {
        const auto* entry = report.find(name);
        REQUIRE(entry != nullptr);
        CHECK_MESSAGE(!entry->passed, name);
    }
}

TEST_CASE("kernels stay consistent with the exact path under the mutation") {
    const svf::WeightedGame g{{svf::Rational(1), svf::Rational(1)}, svf::Rational(0)};
    CHECK(svf::truth_table(*svf::scale_to_integers(g)) == svf::truth_table_exact(g));
    CHECK(svf::eval_game(g, svf::Assignment(2, 0b01)) == -1);
}
