#pragma once
// Deterministic worker-pool helpers.
//
// Chunk boundaries depend only on the problem size, never on the worker
// count; per-chunk results are merged in chunk order, so outputs are
// bitwise identical for any --jobs value.

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace zb {

int  max_threads();         // current worker cap (>= 1)
void set_max_threads(int n); // n <= 0 restores the hardware default

// Runs f(chunk_index) for chunk_index in [0, n_chunks) on up to
// max_threads() workers. f must only write to per-chunk state.
template <class F>
void for_each_chunk(std::size_t n_chunks, F&& f) {
    if (n_chunks == 0) return;
    int workers = max_threads();
    if (workers > static_cast<int>(n_chunks)) workers = static_cast<int>(n_chunks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n_chunks) break;
                f(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// Splits [0, n) into chunks of at most chunk_size, runs f(begin, end, chunk_index)
// per chunk, and leaves merging to the caller (results indexed by chunk).
template <class F>
std::size_t for_each_range_chunk(std::size_t n, std::size_t chunk_size, F&& f) {
    if (chunk_size == 0) chunk_size = 1;
    std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
    for_each_chunk(n_chunks, [&](std::size_t c) {
        std::size_t b = c * chunk_size;
        std::size_t e = b + chunk_size < n ? b + chunk_size : n;
        f(b, e, c);
    });
    return n_chunks;
}

} // namespace zb
