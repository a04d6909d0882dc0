#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace rbs::detail {

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Callers write results into per-index slots.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    };
    if (workers <= 1) {
        run();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run);
}

}  // namespace rbs::detail
