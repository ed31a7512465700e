#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace tycat {

/// Runs fn(begin, end) over a partition of [0, n) on `jobs` threads.
/// Chunk boundaries depend only on (n, jobs); callers that write results
/// into per-index slots get identical output for any job count.
template <typename Fn>
void parallel_chunks(std::size_t n, int jobs, Fn fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || n < 2) {
        fn(std::size_t(0), n);
        return;
    }
    std::size_t workers = std::min<std::size_t>(std::size_t(jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace tycat
