#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace opinion {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 16u)) : 1;
}

// Runs f(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// Chunk boundaries depend only on (n, chunk_size), so any per-chunk output
// merged in chunk order is independent of the worker count.
template <typename F>
void for_each_chunk(int n, int chunk_size, int threads, F&& f) {
    if (n <= 0) return;
    const int n_chunks = (n + chunk_size - 1) / chunk_size;
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) return;
            const int begin = c * chunk_size;
            const int end = std::min(n, begin + chunk_size);
            f(c, begin, end);
        }
    };
    const int workers = std::min(threads, n_chunks);
    if (workers <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace opinion
