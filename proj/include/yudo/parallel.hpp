#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace yudo {

/// Worker count for embarrassingly parallel loops (ensemble realizations,
/// viscosity-ladder members). Each loop body writes to its own slots and
/// reductions run afterwards in a fixed serial order, so results are
/// bit-identical at any thread count.
inline std::atomic<int>& thread_count_ref() {
    static std::atomic<int> n{1};
    return n;
}

inline int thread_count() { return thread_count_ref().load(); }
inline void set_thread_count(int n) { thread_count_ref().store(n < 1 ? 1 : n); }

template <class F>
inline void parallel_for(long begin, long end, F&& body) {
    const long count = end - begin;
    const int workers = std::min<long>(thread_count(), count);
    if (workers <= 1) {
        for (long i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<long> next{begin};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= end) return;
                body(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace yudo
