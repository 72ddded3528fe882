#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kabminor {

/// Worker count from KAB_JOBS, else the hardware concurrency (at least 1).
std::size_t default_jobs();

/// Calls fn(i) for i in [0, count) on up to `jobs` threads. Callers write into
/// per-index slots, so the combined result never depends on scheduling. The
/// exception from the lowest failing index is rethrown.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::size_t err_index = count;
    std::exception_ptr err;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (i < err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace kabminor
