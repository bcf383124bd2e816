#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nil2 {

// worker count from NIL2_WORKERS, else hardware concurrency
inline unsigned worker_count() {
    if (const char* env = std::getenv("NIL2_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// runs fn(i) for i in [0, count); each index lands in a fixed output slot
// upstream, so scheduling order never shows in results
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    unsigned spawn = std::min<std::size_t>(workers, count);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

}  // namespace nil2
