#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <queue>
#include <thread>
#include <vector>

namespace ymlab {

// Blocking worker pool. Work items are independent; callers that need
// deterministic output must not fold results in completion order (index the
// results and combine in index order instead).
class ThreadPool {
  public:
    explicit ThreadPool(unsigned workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned size() const { return static_cast<unsigned>(threads_.size()); }

    // Runs fn(i) for i in [0, count) and waits for completion.
    void run_indexed(std::size_t count, const std::function<void(std::size_t)>& fn);

    // Global pool, sized from YMLAB_THREADS or hardware concurrency.
    static ThreadPool& global();
    // Overrides the global pool size (takes effect for subsequent calls).
    static void set_global_size(unsigned workers);

  private:
    void worker_loop();

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_task_, cv_done_;
    std::queue<std::function<void()>> tasks_;
    std::size_t in_flight_ = 0;
    bool stop_ = false;
};

// Convenience: chunked parallel loop over [0, n) with a fixed chunk size, so
// the work decomposition does not depend on the pool size.
void parallel_for(std::size_t n, std::size_t chunk,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ymlab
