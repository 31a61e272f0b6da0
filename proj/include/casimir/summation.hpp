#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace casimir {

/// Number of worker threads used by the parallel reductions and the preset
/// runner. 0 restores the hardware default. Results never depend on this.
void set_worker_threads(unsigned n);
unsigned worker_threads();

/// Compensated (Kahan) accumulator.
class KahanAccumulator {
public:
    void add(double x) {
        const double dx = x - comp_;
        const double next = sum_ + dx;
        comp_ = (next - sum_) - dx;
        sum_ = next;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {
/// Runs fn(0..n_tasks-1), distributing tasks over the worker pool. Nested
/// calls (from inside a worker) execute serially. Task order of execution is
/// unspecified; callers must make each task independent.
void run_tasks(std::size_t n_tasks, const std::function<void(std::size_t)>& fn);
}  // namespace detail

/// Fixed block length of the deterministic reduction. Block boundaries do not
/// depend on the thread count, so results are bit-identical for any number of
/// workers.
inline constexpr std::size_t kSumBlockSize = 8192;

/// Order-deterministic parallel reduction of term(0) + ... + term(count-1):
/// Kahan summation inside fixed-size blocks, block partials combined in block
/// order with Kahan again.
template <typename TermFn>
double deterministic_sum(std::size_t count, TermFn&& term) {
    if (count == 0) return 0.0;
    const std::size_t n_blocks = (count + kSumBlockSize - 1) / kSumBlockSize;
    std::vector<double> partial(n_blocks);
    detail::run_tasks(n_blocks, [&](std::size_t block) {
        const std::size_t lo = block * kSumBlockSize;
        const std::size_t hi = std::min(lo + kSumBlockSize, count);
        KahanAccumulator acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[block] = acc.value();
    });
    KahanAccumulator total;
    for (double p : partial) total.add(p);
    return total.value();
}

}  // namespace casimir
