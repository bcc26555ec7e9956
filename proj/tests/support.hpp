#pragma once

#include "svf/errors.hpp"
#include "svf/game.hpp"

#include <doctest.h>

#include <initializer_list>
#include <optional>
#include <vector>

namespace testing {

/// Kind of the svf::Error thrown by fn, or nullopt when nothing is thrown.
template <typename Fn>
std::optional<svf::ErrorKind> error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const svf::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::vector<svf::Rational> ints(std::initializer_list<long> values) {
    std::vector<svf::Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline std::vector<svf::Rational> entries_of(const svf::ProbabilityVector& p) {
    return {p.entries().begin(), p.entries().end()};
}

} // namespace testing
