#ifndef GGM_PARALLEL_HPP
#define GGM_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ggm {

// Runs fn(i) for i in [0,count) across a small thread pool. Callers write
// results into storage indexed by i, so the outcome does not depend on the
// schedule.
inline void parallel_for(int count, const std::function<void(int)>& fn, int threads = 0) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    const int workers = std::min(threads, count);
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ggm

#endif
