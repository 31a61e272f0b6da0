#include "casimir/summation.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace casimir {

namespace {

std::atomic<unsigned> g_threads{0};
thread_local bool t_inside_worker = false;

unsigned hardware_default() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace

void set_worker_threads(unsigned n) { g_threads.store(n); }

unsigned worker_threads() {
    const unsigned n = g_threads.load();
    return n == 0 ? hardware_default() : n;
}

namespace detail {

void run_tasks(std::size_t n_tasks, const std::function<void(std::size_t)>& fn) {
    if (n_tasks == 0) return;
    const unsigned want = worker_threads();
    // Serial path: single worker, a single task, or a nested call from inside
    // a worker (no nested pools).
    if (want <= 1 || n_tasks == 1 || t_inside_worker) {
        for (std::size_t i = 0; i < n_tasks; ++i) fn(i);
        return;
    }

    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::size_t>(want, n_tasks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        t_inside_worker = true;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_tasks) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                break;
            }
        }
        t_inside_worker = false;
    };

    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

}  // namespace casimir
