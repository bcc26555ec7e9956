#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace svf {

/// Largest number of cells (sizes x sums) a counting table may allocate.
inline constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 23;

/// Number of subsets S of the given players with |S| = t and sum_{j in S} w_j = s,
/// for every (t, s). Built one player at a time; each step is a shifted row
/// accumulation handled by the SIMD kernels.
class CoalitionCountTable {
public:
    /// Throws WeightRangeOverflow when the table would exceed kMaxTableCells
    /// or more than 62 players are given.
    explicit CoalitionCountTable(std::span<const std::int64_t> weights);

    int players() const noexcept { return players_; }
    std::int64_t min_sum() const noexcept { return min_sum_; }
    std::int64_t max_sum() const noexcept { return min_sum_ + static_cast<std::int64_t>(width_) - 1; }

    std::uint64_t count(int size, std::int64_t sum) const noexcept;

    /// Counts for coalition size t, indexed by sum - min_sum().
    std::span<const std::uint64_t> row(int size) const noexcept {
        return {cells_.data() + static_cast<std::size_t>(size) * width_, width_};
    }

private:
    std::span<std::uint64_t> mutable_row(int size) noexcept {
        return {cells_.data() + static_cast<std::size_t>(size) * width_, width_};
    }

    int players_;
    std::int64_t min_sum_ = 0;
    std::size_t width_ = 1;
    std::vector<std::uint64_t> cells_;
};

} // namespace svf
