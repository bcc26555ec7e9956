#include "svf/kernels.hpp"

#include "svf/game.hpp"

#include <cstdlib>
#include <cstring>

namespace svf::kernels {

namespace detail {

void threshold_words_scalar(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                            std::int64_t threshold, std::span<std::uint64_t> out) {
    const std::size_t lanes = low.size();
    for (std::size_t h = 0; h < high.size(); ++h) {
        const std::int64_t base = high[h] - threshold;
        std::uint64_t word = 0;
        for (std::size_t l = 0; l < lanes; ++l) {
            if (sign_of<std::int64_t>(base + low[l], 0) > 0) word |= std::uint64_t{1} << l;
        }
        out[h] = word;
    }
}

void add_words_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
}

} // namespace detail

bool isa_available(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept {
    static const Isa chosen = [] {
        if (const char* forced = std::getenv("SVF_ISA"); forced && std::strcmp(forced, "scalar") == 0) {
            return Isa::scalar;
        }
        return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    }();
    return chosen;
}

void threshold_words(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                     std::int64_t threshold, std::span<std::uint64_t> out, Isa isa) {
#if defined(__x86_64__)
    if (isa == Isa::avx2 && low.size() >= 4 && isa_available(Isa::avx2)) {
        detail::threshold_words_avx2(high, low, threshold, out);
        return;
    }
#endif
    detail::threshold_words_scalar(high, low, threshold, out);
}

void add_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Isa isa) {
#if defined(__x86_64__)
    if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
        detail::add_words_avx2(dst, src);
        return;
    }
#endif
    detail::add_words_scalar(dst, src);
}

} // namespace svf::kernels
