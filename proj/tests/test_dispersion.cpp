#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "casimir/dispersion.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Wavevector random_in_zone(LatticeFamily family, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Wavevector k;
        switch (family) {
            case LatticeFamily::chain:
                k = {u(rng) * kPi, 0.0};
                break;
            case LatticeFamily::square_diagonal:
                k = {u(rng) * std::sqrt(2.0) * kPi, u(rng) * std::sqrt(2.0) * kPi};
                break;
            case LatticeFamily::triangular:
                k = {u(rng) * 4.0 * kPi / 3.0, u(rng) * 2.0 * kPi / std::sqrt(3.0)};
                break;
            default:
                k = {u(rng) * kPi, u(rng) * kPi};
                break;
        }
        if (in_first_zone(family, k)) return k;
    }
}

double omega_of(LatticeFamily family, Wavevector k) {
    switch (family) {
        case LatticeFamily::chain: return omega_chain(k.k1);
        case LatticeFamily::square: return omega_square(k);
        case LatticeFamily::square_diagonal: return omega_diagonal(k.k1, k.k2);
        case LatticeFamily::triangular: return omega_triangular(k.k1, k.k2);
        case LatticeFamily::spacetime_square: return omega_spacetime_square(k);
        default: throw std::logic_error("no dispersion");
    }
}
}  // namespace

TEST_CASE("chain dispersion") {
    CHECK(omega_chain(0.0) == 0.0);
    CHECK(omega_chain(kPi) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(omega_chain(kPi / 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(omega_chain(-kPi / 2) == omega_chain(kPi / 2));
    CHECK_THROWS_AS(omega_chain(3.5), std::domain_error);
}

TEST_CASE("square dispersion") {
    CHECK(omega_square({0.0, 0.0}) == 0.0);
    CHECK(omega_square({kPi, kPi}) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    const double k = 1e-4;
    CHECK(rel_diff(omega_square({k, 0.0}), k) < 1e-8);  // long-wave limit omega = |k|
    CHECK_THROWS_AS(omega_square({3.5, 0.0}), std::domain_error);
}

TEST_CASE("diagonal dispersion") {
    CHECK(omega_diagonal(0.0, 0.0) == 0.0);
    CHECK(omega_diagonal(0.0, std::sqrt(2.0) * kPi / 2) == doctest::Approx(2.0).epsilon(1e-14));
    // omega -> |k| with cubic error
    for (const double kk : {1e-2, 5e-3, 2.5e-3}) {
        const double w = omega_diagonal(kk, kk);
        const double norm = std::sqrt(2.0) * kk;
        CHECK(std::abs(w - norm) < 0.1 * norm * norm * norm);
    }
    CHECK_THROWS_AS(omega_diagonal(5.0, 0.0), std::domain_error);
}

TEST_CASE("triangular dispersion") {
    CHECK(omega_triangular(0.0, 0.0) == 0.0);
    CHECK(omega_triangular(kPi, 0.0) == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-14));

    // six-fold symmetry under 60-degree rotations
    std::mt19937 rng(7);
    const double c60 = 0.5, s60 = std::sqrt(3.0) / 2.0;
    for (int i = 0; i < 200; ++i) {
        Wavevector k = random_in_zone(LatticeFamily::triangular, rng);
        // stay clear of the zone edge so the rotated point remains inside
        k.k1 *= 0.9;
        k.k2 *= 0.9;
        if (!in_first_zone(LatticeFamily::triangular, k)) continue;
        const Wavevector kr{c60 * k.k1 - s60 * k.k2, s60 * k.k1 + c60 * k.k2};
        if (!in_first_zone(LatticeFamily::triangular, kr)) continue;
        CHECK(rel_diff(omega_triangular(k.k1, k.k2), omega_triangular(kr.k1, kr.k2)) < 1e-12);
    }
    CHECK_THROWS_AS(omega_triangular(4.0, 0.0), std::domain_error);
}

TEST_CASE("spacetime square dispersion") {
    CHECK(omega_spacetime_square({0.0, 0.0}) == 0.0);
    CHECK(omega_spacetime_square({kPi / 2, kPi / 2}) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(omega_spacetime_square({kPi, 0.0}) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK_THROWS_WITH_AS(omega_spacetime_square({kPi, kPi / 2}),
                         doctest::Contains("cutoff"), std::domain_error);
}

TEST_CASE("dispersion evenness and square symmetry") {
    std::mt19937 rng(11);
    for (const auto family :
         {LatticeFamily::chain, LatticeFamily::square, LatticeFamily::square_diagonal,
          LatticeFamily::triangular}) {
        for (int i = 0; i < 100; ++i) {
            const Wavevector k = random_in_zone(family, rng);
            const Wavevector mk{-k.k1, -k.k2};
            CHECK(rel_diff(omega_of(family, k), omega_of(family, mk)) < 1e-12);
        }
    }
    for (int i = 0; i < 100; ++i) {
        const Wavevector k = random_in_zone(LatticeFamily::square, rng);
        const double w = omega_square(k);
        CHECK(omega_square({k.k2, k.k1}) == w);  // sum commutes exactly
        CHECK(rel_diff(omega_square({-k.k1, k.k2}), w) < 1e-15);
    }
}

TEST_CASE("continuum limit is third order") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (const auto family :
         {LatticeFamily::chain, LatticeFamily::square, LatticeFamily::square_diagonal,
          LatticeFamily::triangular}) {
        for (int rep = 0; rep < 3; ++rep) {
            const double theta = family == LatticeFamily::chain ? 0.0 : angle(rng);
            double norm = 0.02;
            std::vector<double> errs;
            for (int j = 0; j < 4; ++j) {
                const Wavevector k{norm * std::cos(theta), norm * std::sin(theta)};
                const double err = std::abs(omega_of(family, k) - norm);
                CHECK(err / (norm * norm * norm) < 0.2);  // bounded cubic coefficient
                errs.push_back(err);
                norm *= 0.5;
            }
            for (std::size_t j = 0; j + 1 < errs.size(); ++j) {
                const double ratio = errs[j] / errs[j + 1];
                CHECK(ratio > 6.5);
                CHECK(ratio < 9.5);
            }
        }
    }
}

TEST_CASE("group velocity") {
    CHECK(group_velocity(LatticeFamily::square, {1e-3, 1e-3}) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(group_velocity(LatticeFamily::square, {kPi, kPi})) < 1e-5);
    CHECK(std::abs(group_velocity(LatticeFamily::chain, {kPi, 0.0})) < 1e-5);
    CHECK_THROWS_AS(group_velocity(LatticeFamily::spacetime_chain, {0.1, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("group speed bounded by c on Hamiltonian lattices") {
    // 200 x 200 strictly interior zone grid per family (200 points for 1D)
    const int res = 200;
    for (const auto family :
         {LatticeFamily::chain, LatticeFamily::square, LatticeFamily::square_diagonal,
          LatticeFamily::triangular}) {
        double ext1 = kPi, ext2 = kPi;
        if (family == LatticeFamily::square_diagonal) ext1 = ext2 = std::sqrt(2.0) * kPi;
        if (family == LatticeFamily::triangular) {
            ext1 = 4.0 * kPi / 3.0;
            ext2 = 2.0 * kPi / std::sqrt(3.0);
        }
        double vmax = 0.0;
        for (int i = 0; i < res; ++i) {
            const double k1 = -ext1 + (i + 0.5) * 2.0 * ext1 / res;
            if (family == LatticeFamily::chain) {
                vmax = std::max(vmax, group_velocity(family, {k1, 0.0}));
                continue;
            }
            for (int j = 0; j < res; ++j) {
                const double k2 = -ext2 + (j + 0.5) * 2.0 * ext2 / res;
                if (!in_first_zone(family, {k1, k2})) continue;
                vmax = std::max(vmax, group_velocity(family, {k1, k2}));
            }
        }
        CHECK(vmax <= 1.0 + 1e-9);
        CHECK(vmax > 0.9);  // the bound is attained near the zone centre
    }
}

TEST_CASE("dispersion grid") {
    const auto square = dispersion_grid(LatticeFamily::square, 3);
    CHECK(square.size() == 9);
    bool has_corner = false;
    for (const auto& row : square) {
        if (rel_diff(row.omega, 2.0 * std::sqrt(2.0)) < 1e-12) has_corner = true;
        CHECK(row.in_domain);
    }
    CHECK(has_corner);

    const auto tri = dispersion_grid(LatticeFamily::triangular, 21);
    int zero_rows = 0;
    for (const auto& row : tri) {
        if (row.omega == 0.0) {
            ++zero_rows;
            CHECK(row.k1 == 0.0);
            CHECK(row.k2 == 0.0);
        }
    }
    CHECK(zero_rows == 1);

    const auto st = dispersion_grid(LatticeFamily::spacetime_square, 11);
    int out_rows = 0;
    for (const auto& row : st) {
        if (!row.in_domain) {
            ++out_rows;
            CHECK(std::isnan(row.omega));
        }
    }
    CHECK(out_rows > 0);

    CHECK(dispersion_grid(LatticeFamily::chain, 17).size() == 17);
    CHECK_THROWS_AS(dispersion_grid(LatticeFamily::square, 1), std::invalid_argument);
    CHECK_THROWS_AS(dispersion_grid(LatticeFamily::spacetime_chain, 10),
                    std::invalid_argument);
}

TEST_CASE("grid csv") {
    const auto grid = dispersion_grid(LatticeFamily::square, 2);
    std::ostringstream os;
    write_grid_csv(os, grid);
    const std::string text = os.str();
    CHECK(text.rfind("k1,k2,omega,vg,in_domain\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
