#include <doctest.h>

#include <cmath>
#include <vector>

#include "casimir/summation.hpp"

using namespace casimir;

namespace {

struct ThreadGuard {
    ~ThreadGuard() { set_worker_threads(0); }
};

}  // namespace

TEST_CASE("kahan accumulator compensates") {
    KahanAccumulator acc;
    for (int i = 0; i < 1000000; ++i) acc.add(0.1);
    CHECK(std::abs(acc.value() - 100000.0) < 1e-9);
}

TEST_CASE("deterministic_sum matches long-double reference") {
    ThreadGuard guard;
    const auto term = [](std::size_t i) {
        const double x = static_cast<double>(i + 1);
        return 1.0 / (x * x);
    };
    long double ref = 0.0L;
    const std::size_t count = 1000000;
    for (std::size_t i = 0; i < count; ++i) ref += term(i);

    for (const unsigned threads : {1u, 4u}) {
        set_worker_threads(threads);
        const double s = deterministic_sum(count, term);
        CHECK(std::abs(s - static_cast<double>(ref)) / static_cast<double>(ref) < 1e-15);
    }
}

TEST_CASE("deterministic_sum is bit-identical for any worker count") {
    ThreadGuard guard;
    const auto term = [](std::size_t i) {
        return std::sin(0.001 * static_cast<double>(i)) / (1.0 + static_cast<double>(i));
    };
    // counts probing block boundaries
    for (const std::size_t count : {std::size_t(1), kSumBlockSize - 1, kSumBlockSize,
                                    kSumBlockSize + 1, 5 * kSumBlockSize + 137}) {
        set_worker_threads(1);
        const double base = deterministic_sum(count, term);
        for (const unsigned threads : {2u, 3u, 8u, 16u}) {
            set_worker_threads(threads);
            CHECK(deterministic_sum(count, term) == base);
        }
    }
    CHECK(deterministic_sum(0, term) == 0.0);
}

TEST_CASE("worker thread setting round-trips") {
    ThreadGuard guard;
    set_worker_threads(3);
    CHECK(worker_threads() == 3);
    set_worker_threads(0);
    CHECK(worker_threads() >= 1);
}

TEST_CASE("exceptions from terms propagate") {
    ThreadGuard guard;
    set_worker_threads(4);
    const auto term = [](std::size_t i) -> double {
        if (i == 12345) throw std::runtime_error("poison term");
        return 1.0;
    };
    CHECK_THROWS_AS(deterministic_sum(100000, term), std::runtime_error);
}
