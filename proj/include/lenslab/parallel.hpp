#ifndef LENSLAB_PARALLEL_HPP
#define LENSLAB_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace lenslab {

// Static block partition of [begin, end) over worker threads.  Results must
// be written to per-index slots so the output does not depend on scheduling.
inline void parallel_for(int begin, int end, const std::function<void(int)>& body,
                         unsigned threads = 0) {
    const int n = end - begin;
    if (n <= 0) return;
    unsigned hw = threads ? threads : std::thread::hardware_concurrency();
    if (hw <= 1 || n == 1) {
        for (int i = begin; i < end; ++i) body(i);
        return;
    }
    hw = std::min<unsigned>(hw, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    pool.reserve(hw);
    for (unsigned w = 0; w < hw; ++w) {
        pool.emplace_back([=, &body] {
            for (int i = begin + static_cast<int>(w); i < end; i += static_cast<int>(hw))
                body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace lenslab

#endif
