#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tpgabor {

/// Worker cap: TPGABOR_THREADS when set (clamped to >= 1), else the
/// hardware concurrency.
inline int max_threads() {
    if (const char* env = std::getenv("TPGABOR_THREADS")) {
        const int requested = std::atoi(env);
        if (requested >= 1) return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Static-split parallel loop over [0, n). Each index is processed exactly
/// once; fn must be safe to call concurrently on disjoint indices.
template <typename Fn>
void parallel_for(long n, Fn&& fn) {
    const long workers = std::min<long>(max_threads(), n);
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long t = 0; t < workers; ++t) {
        const long lo = n * t / workers;
        const long hi = n * (t + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (long i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace tpgabor
