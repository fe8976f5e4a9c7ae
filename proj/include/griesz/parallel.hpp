#pragma once

// Deterministic fork-join map over an index range. Results land in a
// pre-sized vector by index, so the reduction order never depends on
// scheduling. Thread count comes from GRIESZ_THREADS or the hardware.

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace griesz {

inline unsigned thread_count() {
    if (const char* env = std::getenv("GRIESZ_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    const unsigned workers = std::min<std::size_t>(thread_count(), n > 0 ? n : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace griesz
