#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qh::detail {

/// Splits [lo, hi) into `threads` contiguous chunks, runs `work` on each and
/// folds the partial results in chunk order, so the final result does not
/// depend on the thread count.
template <class Result, class Work, class Merge>
Result parallel_ranges(std::int64_t lo, std::int64_t hi, int threads, Work work, Merge merge) {
    if (threads < 1) threads = 1;
    std::int64_t span = hi - lo;
    if (threads == 1 || span < 2 * threads) return work(lo, hi);

    std::vector<Result> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        std::int64_t a = lo + span * t / threads;
        std::int64_t b = lo + span * (t + 1) / threads;
        pool.emplace_back([&, a, b, t] { parts[static_cast<std::size_t>(t)] = work(a, b); });
    }
    for (auto& th : pool) th.join();
    Result acc = std::move(parts[0]);
    for (std::size_t t = 1; t < parts.size(); ++t) acc = merge(std::move(acc), std::move(parts[t]));
    return acc;
}

}  // namespace qh::detail
