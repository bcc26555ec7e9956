#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svf {

struct SelftestEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestEntry> entries;
    bool all_passed() const noexcept;
    const SelftestEntry* find(const std::string& name) const noexcept;
};

struct SelftestOptions {
    /// Largest player count used by the exhaustive checks.
    int max_n = 6;
    std::uint64_t seed = 20240601;
    int jobs = 1;
};

/// Runs every module invariant at desk scale. Failures (including thrown
/// errors) become report entries; nothing escapes.
SelftestReport run_selftest(const SelftestOptions& options = {});

} // namespace svf
