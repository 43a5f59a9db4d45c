#include "ymlab/thread_pool.hpp"

#include <atomic>
#include <cstdlib>
#include <memory>
#include <string>

namespace ymlab {

ThreadPool::ThreadPool(unsigned workers) {
    if (workers < 1) workers = 1;
    threads_.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) threads_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lk(mu_);
        stop_ = true;
    }
    cv_task_.notify_all();
    for (auto& t : threads_) t.join();
}

void ThreadPool::worker_loop() {
    for (;;) {
        std::function<void()> task;
        {
            std::unique_lock<std::mutex> lk(mu_);
            cv_task_.wait(lk, [this] { return stop_ || !tasks_.empty(); });
            if (stop_ && tasks_.empty()) return;
            task = std::move(tasks_.front());
            tasks_.pop();
        }
        task();
        {
            std::lock_guard<std::mutex> lk(mu_);
            if (--in_flight_ == 0) cv_done_.notify_all();
        }
    }
}

void ThreadPool::run_indexed(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (count == 1 || threads_.size() == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    {
        std::lock_guard<std::mutex> lk(mu_);
        in_flight_ += count;
        for (std::size_t i = 0; i < count; ++i) tasks_.push([&fn, i] { fn(i); });
    }
    cv_task_.notify_all();
    std::unique_lock<std::mutex> lk(mu_);
    cv_done_.wait(lk, [this] { return in_flight_ == 0; });
}

namespace {
std::atomic<unsigned> g_pool_size{0};
std::unique_ptr<ThreadPool>& pool_slot() {
    static std::unique_ptr<ThreadPool> p;
    return p;
}
std::mutex g_pool_mu;

unsigned default_size() {
    if (const char* env = std::getenv("YMLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}
}  // namespace

ThreadPool& ThreadPool::global() {
    std::lock_guard<std::mutex> lk(g_pool_mu);
    auto& p = pool_slot();
    unsigned want = g_pool_size.load();
    if (want == 0) want = default_size();
    if (!p || p->size() != want) p = std::make_unique<ThreadPool>(want);
    return *p;
}

void ThreadPool::set_global_size(unsigned workers) { g_pool_size.store(workers); }

void parallel_for(std::size_t n, std::size_t chunk,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    if (chunk == 0) chunk = 1;
    const std::size_t pieces = (n + chunk - 1) / chunk;
    if (pieces == 1) {
        body(0, n);
        return;
    }
    ThreadPool::global().run_indexed(pieces, [&](std::size_t p) {
        const std::size_t lo = p * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        body(lo, hi);
    });
}

}  // namespace ymlab
