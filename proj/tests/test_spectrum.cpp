#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "casimir/dispersion.hpp"
#include "casimir/spectrum.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Fold a wavevector into the hexagonal first zone by reciprocal translations.
Wavevector fold_triangular(Wavevector k) {
    const double g1x = 2.0 * kPi, g1y = -2.0 * kPi / std::sqrt(3.0);
    const double g2x = 0.0, g2y = 4.0 * kPi / std::sqrt(3.0);
    for (int m1 = -2; m1 <= 2; ++m1) {
        for (int m2 = -2; m2 <= 2; ++m2) {
            const Wavevector cand{k.k1 + m1 * g1x + m2 * g2x, k.k2 + m1 * g1y + m2 * g2y};
            if (in_first_zone(LatticeFamily::triangular, cand)) return cand;
        }
    }
    throw std::logic_error("failed to fold wavevector into the hexagonal zone");
}
}  // namespace

TEST_CASE("chain spectrum n = 2") {
    const auto spec = mode_spectrum(LatticeGeometry::chain(10), 2);
    REQUIRE(spec.frequencies.size() == 2);
    CHECK(spec.r_max == 2);
    CHECK(spec.s_max == 1);
    CHECK(spec.frequencies[0] == doctest::Approx(1.0).epsilon(1e-14));            // 2 sin(pi/6)
    CHECK(spec.frequencies[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14)); // 2 sin(pi/3)
}

TEST_CASE("square spectrum Nx = 2, n = 1") {
    const auto spec = mode_spectrum(LatticeGeometry::square(2, 8), 1);
    REQUIRE(spec.frequencies.size() == 2);
    CHECK(spec.frequencies[0] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
    CHECK(spec.frequencies[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("spectrum sizes and positivity") {
    const auto tri = mode_spectrum(LatticeGeometry::triangular(7, 30), 5);
    CHECK(tri.frequencies.size() == 35);  // Nx * n
    CHECK(tri.r_max == 7);
    CHECK(tri.s_max == 5);
    for (const double w : tri.frequencies) CHECK(w >= 0.0);

    CHECK_THROWS_AS(mode_spectrum(LatticeGeometry::spacetime_square(8, 8), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(mode_spectrum(LatticeGeometry::chain(10), 0), std::invalid_argument);
}

TEST_CASE("spectrum matches dispersion at quantized wavevectors") {
    const int n = 5;

    SUBCASE("chain") {
        const auto spec = mode_spectrum(LatticeGeometry::chain(20), 9);
        for (int r = 1; r <= 9; ++r) {
            const double k = kPi * r / 10.0;
            CHECK(rel_diff(spec.frequencies[r - 1], omega_chain(k)) < 1e-12);
        }
    }

    SUBCASE("square") {
        const int nx = 7;
        const auto spec = mode_spectrum(LatticeGeometry::square(nx, 20), n);
        for (int r = 1; r <= nx; ++r) {
            for (int s = 1; s <= n; ++s) {
                double k1 = 2.0 * kPi * r / nx;
                if (k1 > kPi) k1 -= 2.0 * kPi;
                const double k2 = kPi * s / (n + 1.0);
                const double w = spec.frequencies[(r - 1) * n + (s - 1)];
                CHECK(rel_diff(w, omega_square({k1, k2})) < 1e-12);
            }
        }
    }

    SUBCASE("square diagonal") {
        const int n1 = 9;
        const auto spec = mode_spectrum(LatticeGeometry::square_diagonal(n1, 20), n);
        for (int r = 1; r <= n1; ++r) {
            for (int s = 1; s <= n; ++s) {
                double k_par = 2.0 * std::sqrt(2.0) * kPi * r / n1;
                if (k_par > std::sqrt(2.0) * kPi) k_par -= 2.0 * std::sqrt(2.0) * kPi;
                const double k_perp = std::sqrt(2.0) * kPi * s / (n + 1.0);
                const double w = spec.frequencies[(r - 1) * n + (s - 1)];
                CHECK(rel_diff(w, omega_diagonal(k_par, k_perp)) < 1e-12);
            }
        }
    }

    SUBCASE("triangular") {
        const int nx = 7;
        const auto spec = mode_spectrum(LatticeGeometry::triangular(nx, 20), n);
        for (int r = 1; r <= nx; ++r) {
            for (int s = 1; s <= n; ++s) {
                const double kx = 2.0 * kPi * r / nx;
                const double ky = 2.0 * kPi * s / (std::sqrt(3.0) * (n + 1.0));
                const Wavevector folded = fold_triangular({kx, ky});
                const double w = spec.frequencies[(r - 1) * n + (s - 1)];
                CHECK(rel_diff(w, omega_triangular(folded.k1, folded.k2)) < 1e-12);
            }
        }
    }
}
