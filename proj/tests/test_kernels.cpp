#include "svf/kernels.hpp"
#include "svf/random.hpp"

#include <doctest.h>

using namespace svf;
using namespace svf::kernels;

namespace {

std::vector<std::uint64_t> reference_words(const std::vector<std::int64_t>& high, const std::vector<std::int64_t>& low,
                                           std::int64_t threshold) {
    std::vector<std::uint64_t> out(high.size());
    for (std::size_t h = 0; h < high.size(); ++h) {
        for (std::size_t l = 0; l < low.size(); ++l) {
            if (high[h] + low[l] - threshold >= 0) out[h] |= std::uint64_t{1} << l;
        }
    }
    return out;
}

} // namespace

TEST_CASE("scalar threshold_words matches the definition") {
    Rng rng(1);
    for (std::size_t lanes : {1U, 2U, 4U, 8U, 16U, 32U, 64U}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> low(lanes), high(static_cast<std::size_t>(uniform_int(rng, 1, 20)));
            for (auto& v : low) v = uniform_int(rng, -8, 8);
            for (auto& v : high) v = uniform_int(rng, -8, 8);
            const std::int64_t threshold = uniform_int(rng, -4, 4);
            std::vector<std::uint64_t> out(high.size());
            threshold_words(high, low, threshold, out, Isa::scalar);
            REQUIRE(out == reference_words(high, low, threshold));
        }
    }
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
    if (!isa_available(Isa::avx2)) {
        MESSAGE("AVX2 not available; only the scalar path is exercised");
        return;
    }
    Rng rng(2);
    const std::int64_t big = std::int64_t{1} << 60;
    for (std::size_t lanes : {4U, 8U, 16U, 32U, 64U}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::int64_t> low(lanes), high(static_cast<std::size_t>(uniform_int(rng, 1, 40)));
            // mix tiny values (many exact ties) with values near the supported range
            const bool wide = trial % 4 == 0;
            for (auto& v : low) v = wide ? std::uniform_int_distribution<std::int64_t>(-big, big)(rng) : uniform_int(rng, -3, 3);
            for (auto& v : high) v = wide ? std::uniform_int_distribution<std::int64_t>(-big, big)(rng) : uniform_int(rng, -3, 3);
            const std::int64_t threshold = wide ? std::uniform_int_distribution<std::int64_t>(-big, big)(rng) : uniform_int(rng, -2, 2);
            std::vector<std::uint64_t> a(high.size()), b(high.size());
            threshold_words(high, low, threshold, a, Isa::scalar);
            threshold_words(high, low, threshold, b, Isa::avx2);
            REQUIRE(a == b);
            REQUIRE(a == reference_words(high, low, threshold));
        }
    }
    for (std::size_t len : {0U, 1U, 3U, 4U, 5U, 17U, 64U, 1000U}) {
        std::vector<std::uint64_t> src(len), d1(len);
        for (std::size_t k = 0; k < len; ++k) {
            src[k] = rng();
            d1[k] = rng();
        }
        auto d2 = d1;
        add_words(d1, src, Isa::scalar);
        add_words(d2, src, Isa::avx2);
        REQUIRE(d1 == d2);
    }
}

TEST_CASE("dispatcher reports a usable ISA") {
    CHECK(isa_available(Isa::scalar));
    CHECK(isa_available(active_isa()));
}
