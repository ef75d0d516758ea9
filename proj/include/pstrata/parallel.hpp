#ifndef PSTRATA_PARALLEL_HPP
#define PSTRATA_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace pstrata {

// Deterministic parallel map: fn(i) writes only into slot i of
// caller-provided storage, so the result is independent of the thread count.
inline void parallel_for(long n, int threads, const std::function<void(long)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    int nt = static_cast<int>(std::min<long>(threads, n));
    std::vector<std::exception_ptr> errors(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (;;) {
                    long i = next.fetch_add(1);
                    if (i >= n) return;
                    fn(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace pstrata

#endif
