#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace whittaker::cli {

// Worker count: WHITTAKER_THREADS wins over the requested value.
inline int resolve_threads(int requested) {
    if (const char* env = std::getenv("WHITTAKER_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return std::max(1, requested);
}

// Runs f(i) for i in [0, n) on up to `threads` workers. The first exception
// thrown by any worker is rethrown after all workers finished.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first;
    std::mutex mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!first) first = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first) std::rethrow_exception(first);
}

}  // namespace whittaker::cli
