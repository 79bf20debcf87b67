#ifndef MBGK_PARALLEL_HPP
#define MBGK_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace mbgk {

/**
 * Static-partition parallel loop over [0, n). Each index is processed exactly
 * once by exactly one thread; results are bitwise independent of the thread
 * count as long as the body touches disjoint state per index.
 */
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    const int workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace mbgk

#endif
