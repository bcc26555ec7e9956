#include "svf/kernels.hpp"

#include "svf/game.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#define SVF_AVX2 __attribute__((target("avx2")))

namespace svf::kernels::detail {

// Four int64 lanes per register; each compare yields four bits via movemask_pd.
SVF_AVX2 void threshold_words_avx2(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                                   std::int64_t threshold, std::span<std::uint64_t> out) {
    const std::size_t lanes = low.size();
    // margin >= 0  <=>  margin > -1 ; mutated tie rule uses margin > 0
    const __m256i floor = _mm256_set1_epi64x(kSignAtZero > 0 ? -1 : 0);
    for (std::size_t h = 0; h < high.size(); ++h) {
        const __m256i base = _mm256_set1_epi64x(high[h] - threshold);
        std::uint64_t word = 0;
        for (std::size_t l = 0; l < lanes; l += 4) {
            const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(low.data() + l));
            const __m256i margin = _mm256_add_epi64(base, lo);
            const __m256i hit = _mm256_cmpgt_epi64(margin, floor);
            const auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(hit)));
            word |= bits << l;
        }
        out[h] = word;
    }
}

SVF_AVX2 void add_words_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    const std::size_t n = src.size();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + k);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + k);
        _mm256_storeu_si256(d, _mm256_add_epi64(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; k < n; ++k) dst[k] += src[k];
}

} // namespace svf::kernels::detail

#endif
