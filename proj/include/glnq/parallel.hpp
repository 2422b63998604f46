// parallel.hpp -- deterministic block-parallel loop.
//
// Work is split into fixed contiguous blocks regardless of thread count, and
// callers combine per-block results in block order, so output never depends
// on scheduling.

#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace glnq {

inline std::size_t parallel_block_size(std::size_t count) {
    return count <= 4096 ? count : (count + 255) / 256;
}
inline std::size_t parallel_block_count(std::size_t count) {
    if (count == 0) return 0;
    std::size_t block = parallel_block_size(count);
    return (count + block - 1) / block;
}

// Calls body(begin, end, block_index) for a fixed partition of [0, count).
// The number of blocks depends only on count, never on threads.
inline void parallel_blocks(std::size_t count, int threads,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t block = parallel_block_size(count);
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t b = 0; b < count; b += block)
        ranges.emplace_back(b, std::min(count, b + block));

    if (threads <= 1 || ranges.size() == 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i)
            body(ranges[i].first, ranges[i].second, i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mtx;
    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (next >= ranges.size()) return;
                i = next++;
            }
            body(ranges[i].first, ranges[i].second, i);
        }
    };
    int nthreads = std::min<int>(threads, static_cast<int>(ranges.size()));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace glnq
