#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <atomic>
#include <thread>
#include <vector>

namespace cobarlab {

/// Worker cap: COBARLAB_THREADS when set, hardware concurrency otherwise.
inline int thread_budget() {
    if (const char* env = std::getenv("COBARLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Index-parallel loop with deterministic result placement: fn(i) must only
/// write state owned by index i.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cobarlab
