#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace vbf {

/// 0 means "all hardware threads".
inline unsigned resolve_threads(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

/// Splits [begin, end) into contiguous blocks, one per worker, and runs
/// fn(worker, lo, hi) on each. Runs inline when a single worker is requested.
template <class Fn>
void parallel_blocks(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    const std::uint64_t n = end > begin ? end - begin : 0;
    if (threads == 1 || n < 2) {
        fn(0u, begin, end);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = begin + n * w / threads;
        const std::uint64_t hi = begin + n * (w + 1) / threads;
        pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace vbf
