#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "pathmean/rng.hpp"

namespace pathmean::detail {

/// Fills diffs[s] with work(s, rng_s) for s in [0, M), chunked over threads.
/// Sample s always draws from substream(seed, stream_a, s), so results do not
/// depend on the thread count.
inline void fill_samples(int M, std::uint64_t seed, std::uint64_t stream_a, int threads,
                         const std::function<double(int, Rng&)>& work,
                         std::vector<double>& diffs) {
    diffs.assign(static_cast<std::size_t>(M), 0.0);
    const int n_threads = std::max(1, std::min(threads, M));
    auto run_range = [&](int lo, int hi) {
        for (int s = lo; s < hi; ++s) {
            Rng rng = Rng::substream(seed, stream_a, static_cast<std::uint64_t>(s));
            diffs[static_cast<std::size_t>(s)] = work(s, rng);
        }
    };
    if (n_threads == 1) {
        run_range(0, M);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    const int chunk = (M + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(M, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
}

} // namespace pathmean::detail
