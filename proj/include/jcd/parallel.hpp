#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace jcd {

/// Worker count for sweeps: JCD_THREADS if set (clamped to >= 1), else the
/// hardware concurrency. Read on every call so tests can vary it.
int worker_count();

/// Run fn(i) for i in [0, count) on a worker pool. Each index is claimed
/// exactly once; callers write results into per-index slots, so the merged
/// output is identical for any worker count. fn must not throw.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_count()),
                              count == 0 ? 1 : count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace jcd
