#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fracsde {

/// Fixed chunk width for Monte Carlo reductions. Partial results are produced
/// per chunk and combined in chunk order, so the final sum does not depend on
/// the number of worker threads.
inline constexpr std::size_t kMcChunk = 1024;

/// Runs fn(chunk_index, begin, end) over [0, n) split into kMcChunk-sized
/// chunks, in parallel. The caller writes per-chunk state indexed by
/// chunk_index and combines it sequentially afterwards.
inline void for_each_chunk(std::size_t n,
                           const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                           unsigned n_threads = 0) {
    const std::size_t n_chunks = (n + kMcChunk - 1) / kMcChunk;
    if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    if (n_chunks <= 1 || n_threads == 1) {
        for (std::size_t c = 0; c < n_chunks; ++c)
            fn(c, c * kMcChunk, std::min(n, (c + 1) * kMcChunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            fn(c, c * kMcChunk, std::min(n, (c + 1) * kMcChunk));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

/// Mean and standard error accumulated chunk by chunk in index order.
struct ChunkedMean {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t n = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    void combine(const ChunkedMean& other) {
        sum += other.sum;
        sum_sq += other.sum_sq;
        n += other.n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double stderr_of_mean() const {
        if (n < 2) return 0.0;
        const double m = mean();
        double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        if (var < 0.0) var = 0.0;
        return std::sqrt(var / static_cast<double>(n));
    }
};

} // namespace fracsde
