#pragma once

// Deterministic fork-join helper: items are processed by a worker pool, but
// per-item results are merged strictly in index order, so reductions never
// depend on thread count or scheduling.

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace symco {

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

// Runs fn(i) for i in [0, count) on `threads` workers.  fn must only touch
// its own slot of any shared output.
inline void parallel_for(size_t count, unsigned threads,
                         const std::function<void(size_t)>& fn) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    unsigned use = std::min<size_t>(threads, count);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < use; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace symco
