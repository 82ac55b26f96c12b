// Deterministic chunked parallelism: the index range is cut into contiguous
// chunks, each chunk produces its own partial state, and partials are merged
// on the calling thread in ascending chunk order. Results do not depend on
// the number of worker threads.
#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace zmom {

inline int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// f(chunk_index, begin, end) fills partials[chunk_index].
template <class Partial, class F>
std::vector<Partial> run_chunked(std::size_t begin, std::size_t end, int n_chunks, int n_threads, F&& f) {
    if (n_chunks < 1) n_chunks = 1;
    std::size_t total = end > begin ? end - begin : 0;
    if (static_cast<std::size_t>(n_chunks) > total && total > 0) n_chunks = static_cast<int>(total);
    if (total == 0) n_chunks = 1;
    std::vector<Partial> partials(n_chunks);
    auto chunk_bounds = [&](int c) {
        std::size_t lo = begin + total * c / n_chunks;
        std::size_t hi = begin + total * (c + 1) / n_chunks;
        return std::pair<std::size_t, std::size_t>(lo, hi);
    };
    if (n_threads <= 1 || n_chunks == 1) {
        for (int c = 0; c < n_chunks; ++c) {
            auto [lo, hi] = chunk_bounds(c);
            f(c, lo, hi, partials[c]);
        }
        return partials;
    }
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    int nw = n_threads < n_chunks ? n_threads : n_chunks;
    for (int w = 0; w < nw; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                int c = next.fetch_add(1);
                if (c >= n_chunks) break;
                auto [lo, hi] = chunk_bounds(c);
                f(c, lo, hi, partials[c]);
            }
        });
    }
    for (auto& t : workers) t.join();
    return partials;
}

} // namespace zmom
