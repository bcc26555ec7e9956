#pragma once

// Integer inner loops with a scalar reference and an AVX2 variant. All
// variants are exact and must produce bit-identical output; the dispatcher
// picks the widest one the CPU supports.

#include <cstdint>
#include <span>
#include <string_view>

namespace svf::kernels {

enum class Isa { scalar, avx2 };

constexpr std::string_view to_string(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept;

/// Widest available ISA, detected once. SVF_ISA=scalar in the environment
/// forces the reference path.
Isa active_isa() noexcept;

/// For every h, out[h] gets bit l set iff high[h] + low[l] - threshold is
/// nonnegative (strictly positive under the mutated tie rule).
/// low.size() must be a power of two no larger than 64.
void threshold_words(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                     std::int64_t threshold, std::span<std::uint64_t> out, Isa isa);

inline void threshold_words(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                            std::int64_t threshold, std::span<std::uint64_t> out) {
    threshold_words(high, low, threshold, out, active_isa());
}

/// dst[k] += src[k] (wrapping uint64 addition).
void add_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Isa isa);

inline void add_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    add_words(dst, src, active_isa());
}

namespace detail {
void threshold_words_scalar(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                            std::int64_t threshold, std::span<std::uint64_t> out);
void add_words_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
#if defined(__x86_64__)
void threshold_words_avx2(std::span<const std::int64_t> high, std::span<const std::int64_t> low,
                          std::int64_t threshold, std::span<std::uint64_t> out);
void add_words_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
#endif
} // namespace detail

} // namespace svf::kernels
