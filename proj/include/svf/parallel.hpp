#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace svf {

/// Runs body(begin, end, worker) over [0, count) split into `jobs` contiguous
/// chunks. jobs <= 1 runs inline. The first exception thrown is rethrown.
template <typename Body>
void parallel_chunks(std::size_t count, int jobs, Body&& body) {
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(jobs < 1 ? 1 : jobs), 1,
                                                        count == 0 ? 1 : count);
    if (workers == 1) {
        body(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace svf
