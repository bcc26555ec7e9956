#include "svf/coalition_table.hpp"

#include "svf/errors.hpp"
#include "svf/kernels.hpp"

#include <cstdlib>
#include <string>

namespace svf {

CoalitionCountTable::CoalitionCountTable(std::span<const std::int64_t> weights)
    : players_(static_cast<int>(weights.size())) {
    if (players_ > 62) throw Error(ErrorKind::WeightRangeOverflow, "counting tables support at most 62 players");
    std::uint64_t spread = 0;
    for (std::int64_t w : weights) {
        const auto magnitude = static_cast<std::uint64_t>(w < 0 ? -w : w);
        if (magnitude >= kMaxTableCells) {
            throw Error(ErrorKind::WeightRangeOverflow, "weight " + std::to_string(w) + " is too large for the DP");
        }
        spread += magnitude;
        if (w < 0) min_sum_ += w;
    }
    width_ = static_cast<std::size_t>(spread + 1);
    const std::uint64_t cells = static_cast<std::uint64_t>(width_) * static_cast<std::uint64_t>(players_ + 1);
    if (spread >= kMaxTableCells || cells > kMaxTableCells) {
        throw Error(ErrorKind::WeightRangeOverflow,
                    "counting table of " + std::to_string(cells) + " cells exceeds the limit");
    }
    cells_.assign(static_cast<std::size_t>(cells), 0);
    mutable_row(0)[static_cast<std::size_t>(-min_sum_)] = 1;

    for (int j = 0; j < players_; ++j) {
        const std::int64_t w = weights[static_cast<std::size_t>(j)];
        const auto shift = static_cast<std::size_t>(w < 0 ? -w : w);
        const std::size_t len = width_ - shift;
        for (int t = j; t >= 0; --t) {
            auto src = row(t);
            auto dst = mutable_row(t + 1);
            if (w >= 0) kernels::add_words(dst.subspan(shift, len), src.subspan(0, len));
            else kernels::add_words(dst.subspan(0, len), src.subspan(shift, len));
        }
    }
}

std::uint64_t CoalitionCountTable::count(int size, std::int64_t sum) const noexcept {
    if (size < 0 || size > players_ || sum < min_sum() || sum > max_sum()) return 0;
    return row(size)[static_cast<std::size_t>(sum - min_sum_)];
}

} // namespace svf
