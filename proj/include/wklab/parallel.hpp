#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wklab {

// WKLAB_THREADS environment variable, else 1 (keeps runs reproducible
// unless parallelism is asked for).
inline int default_thread_count() {
    if (const char* env = std::getenv("WKLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// fn(i) for i in [0, count), statically block-partitioned across workers.
// fn must be safe to run concurrently for distinct i.
inline void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const size_t workers = std::min<size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const size_t lo = count * w / workers;
            const size_t hi = count * (w + 1) / workers;
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace wklab
