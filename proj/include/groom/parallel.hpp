// Deterministic work distribution: items are indexed, workers pull indices
// from an atomic counter, and callers combine per-index results so the
// outcome never depends on the worker count.
#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace groom {

template <class Fn>
void parallel_for(int begin, int end, int workers, Fn&& fn) {
    if (end <= begin) return;
    if (workers <= 1 || end - begin == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<int> next{begin};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto pump = [&]() {
        try {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= end) return;
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(end);  // drain remaining work
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(workers, end - begin);
    pool.reserve(static_cast<size_t>(spawn - 1));
    for (int t = 1; t < spawn; ++t) pool.emplace_back(pump);
    pump();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace groom
