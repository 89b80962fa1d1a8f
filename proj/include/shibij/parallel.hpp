#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace shibij {

/// Worker count for jobs = 0: hardware concurrency, at least 1.
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) {
        return jobs;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(0), ..., fn(count-1) on up to `jobs` threads. The first exception
/// thrown by any task is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    const auto workers = std::min<std::size_t>(resolve_jobs(jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= count || failed.load()) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true);
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace shibij
