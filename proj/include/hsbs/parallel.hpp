#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hsbs {

// Runs fn(i) for i in [0, n). Each index is handled by exactly one worker and
// written to caller-owned slots, so results are identical to a sequential run.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t min_per_thread = 4) {
    if (n == 0) return;
    std::size_t hw = std::thread::hardware_concurrency();
    std::size_t workers = hw ? hw : 1;
    if (workers > n / min_per_thread) workers = n / min_per_thread;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace hsbs
