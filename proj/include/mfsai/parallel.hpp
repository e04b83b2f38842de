#ifndef MFSAI_PARALLEL_HPP
#define MFSAI_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mfsai::detail {

/// Runs fn(i) for every i in [0, count) on up to num_threads workers
/// (0 = hardware concurrency). Indices are dealt in strides so strongly
/// uneven per-index cost stays balanced. The first exception thrown by any
/// worker is rethrown after all workers have joined.
inline void parallel_for(int count, int num_threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    int workers = num_threads;
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw > 0 ? static_cast<int>(hw) : 1;
    }
    if (workers > count) workers = count;

    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }

    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto run = [&](int t) {
        try {
            for (int i = t; i < count; i += workers) {
                if (failed.load(std::memory_order_relaxed)) return;
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run, t);
    run(0);
    for (std::thread& th : pool) th.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mfsai::detail

#endif
