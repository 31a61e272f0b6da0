#include "casimir/dispersion.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZoneSlack = 1e-9;       // tolerate boundary rounding
constexpr double kRadicandSlack = 1e-12;  // clamp window for radicands
constexpr double kFdStep = 1e-6;          // central-difference step, radians

double clamped_sqrt(double radicand) {
    if (radicand < 0.0) {
        if (radicand < -kRadicandSlack) {
            throw std::domain_error("dispersion radicand is negative beyond rounding: " +
                                    std::to_string(radicand));
        }
        return 0.0;
    }
    return std::sqrt(radicand);
}

double sin_sq_half(double k) {
    const double s = std::sin(0.5 * k);
    return s * s;
}

// Hexagonal zone of the triangular lattice: |k . G| <= |G|^2 / 2 for the
// three shortest reciprocal vectors G (vertices at (+-4pi/3, 0)).
bool in_hexagon(double kx, double ky) {
    const double gx = 2.0 * kPi;
    const double gy = 2.0 * kPi / std::sqrt(3.0);
    const double half_g_sq = 0.5 * (gx * gx + gy * gy);
    const std::array<std::array<double, 2>, 3> gs = {{
        {gx, gy}, {0.0, 2.0 * gy}, {-gx, gy}}};
    for (const auto& g : gs) {
        const double dot = kx * g[0] + ky * g[1];
        if (std::abs(dot) > half_g_sq * (1.0 + kZoneSlack) + kZoneSlack) return false;
    }
    return true;
}

}  // namespace

double omega_chain(double k) {
    if (!(std::abs(k) <= kPi + kZoneSlack)) {
        throw std::domain_error("chain wavevector outside the first zone (|k| <= pi): k = " +
                                std::to_string(k));
    }
    return 2.0 * std::sin(0.5 * std::abs(k));
}

double omega_square(Wavevector k) {
    if (!in_first_zone(LatticeFamily::square, k)) {
        throw std::domain_error("square-lattice wavevector outside the first zone");
    }
    return 2.0 * std::sqrt(sin_sq_half(k.k1) + sin_sq_half(k.k2));
}

double omega_diagonal(double k_par, double k_perp) {
    if (!in_first_zone(LatticeFamily::square_diagonal, {k_par, k_perp})) {
        throw std::domain_error("rotated-frame wavevector outside the periodicity cell");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double radicand = 1.0 - std::cos(k_par * inv_sqrt2) * std::cos(k_perp * inv_sqrt2);
    return 2.0 * clamped_sqrt(radicand);
}

double omega_triangular(double kx, double ky) {
    if (!in_first_zone(LatticeFamily::triangular, {kx, ky})) {
        throw std::domain_error("triangular-lattice wavevector outside the hexagonal zone");
    }
    const double radicand =
        3.0 - std::cos(kx) - 2.0 * std::cos(0.5 * std::sqrt(3.0) * ky) * std::cos(0.5 * kx);
    return 2.0 / std::sqrt(3.0) * clamped_sqrt(radicand);
}

double omega_spacetime_square(Wavevector k) {
    if (!in_first_zone(LatticeFamily::spacetime_square, k)) {
        throw std::domain_error("spacetime-square wavevector outside the first zone");
    }
    const double s = sin_sq_half(k.k1) + sin_sq_half(k.k2);
    if (s > 1.0) {
        if (s > 1.0 + kRadicandSlack) {
            throw std::domain_error(
                "wavevector beyond the discrete-time propagation cutoff: "
                "sin^2(k1/2) + sin^2(k2/2) = " + std::to_string(s) +
                " > 1 (such modes have no real frequency)");
        }
        return 2.0 * std::asin(1.0);
    }
    return 2.0 * std::asin(std::sqrt(s));
}

bool in_first_zone(LatticeFamily family, Wavevector k) {
    const double b = kPi + kZoneSlack;
    switch (family) {
        case LatticeFamily::chain:
        case LatticeFamily::spacetime_chain:
            return std::abs(k.k1) <= b;
        case LatticeFamily::square:
        case LatticeFamily::spacetime_square:
            return std::abs(k.k1) <= b && std::abs(k.k2) <= b;
        case LatticeFamily::square_diagonal: {
            const double r = std::sqrt(2.0) * kPi + kZoneSlack;
            return std::abs(k.k1) <= r && std::abs(k.k2) <= r;
        }
        case LatticeFamily::triangular:
            return in_hexagon(k.k1, k.k2);
    }
    return false;
}

namespace detail {

double omega_raw(LatticeFamily family, double k1, double k2) {
    switch (family) {
        case LatticeFamily::chain:
            return 2.0 * std::abs(std::sin(0.5 * k1));
        case LatticeFamily::square:
            return 2.0 * std::sqrt(sin_sq_half(k1) + sin_sq_half(k2));
        case LatticeFamily::square_diagonal: {
            const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            const double radicand = 1.0 - std::cos(k1 * inv_sqrt2) * std::cos(k2 * inv_sqrt2);
            return 2.0 * std::sqrt(std::max(radicand, 0.0));
        }
        case LatticeFamily::triangular: {
            const double radicand =
                3.0 - std::cos(k1) - 2.0 * std::cos(0.5 * std::sqrt(3.0) * k2) * std::cos(0.5 * k1);
            return 2.0 / std::sqrt(3.0) * std::sqrt(std::max(radicand, 0.0));
        }
        case LatticeFamily::spacetime_square: {
            const double s = sin_sq_half(k1) + sin_sq_half(k2);
            if (s > 1.0 + kRadicandSlack) return std::numeric_limits<double>::quiet_NaN();
            return 2.0 * std::asin(std::min(std::sqrt(s), 1.0));
        }
        case LatticeFamily::spacetime_chain:
            break;
    }
    throw std::invalid_argument("no dispersion relation exposed for family " +
                                std::string(family_name(family)));
}

}  // namespace detail

double group_velocity(LatticeFamily family, Wavevector k) {
    if (family == LatticeFamily::spacetime_chain) {
        throw std::invalid_argument("group velocity is not exposed for the spacetime chain");
    }
    if (family == LatticeFamily::chain) {
        const double d = (detail::omega_raw(family, k.k1 + kFdStep, 0.0) -
                          detail::omega_raw(family, k.k1 - kFdStep, 0.0)) /
                         (2.0 * kFdStep);
        return std::abs(d);
    }
    const double d1 = (detail::omega_raw(family, k.k1 + kFdStep, k.k2) -
                       detail::omega_raw(family, k.k1 - kFdStep, k.k2)) /
                      (2.0 * kFdStep);
    const double d2 = (detail::omega_raw(family, k.k1, k.k2 + kFdStep) -
                       detail::omega_raw(family, k.k1, k.k2 - kFdStep)) /
                      (2.0 * kFdStep);
    return std::hypot(d1, d2);
}

std::vector<DispersionSample> dispersion_grid(LatticeFamily family, int resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("grid resolution must be at least 2");
    }
    if (family == LatticeFamily::spacetime_chain) {
        throw std::invalid_argument("no dispersion grid for the spacetime chain");
    }

    double ext1 = kPi;
    double ext2 = kPi;
    if (family == LatticeFamily::square_diagonal) {
        ext1 = ext2 = std::sqrt(2.0) * kPi;
    } else if (family == LatticeFamily::triangular) {
        ext1 = 4.0 * kPi / 3.0;                 // zone vertices along kx
        ext2 = 2.0 * kPi / std::sqrt(3.0);      // flat zone edges along ky
    }

    const auto coord = [resolution](double ext, int i) {
        return -ext + 2.0 * ext * static_cast<double>(i) / (resolution - 1);
    };

    std::vector<DispersionSample> grid;
    if (family == LatticeFamily::chain) {
        grid.reserve(static_cast<std::size_t>(resolution));
        for (int i = 0; i < resolution; ++i) {
            const double k1 = coord(ext1, i);
            grid.push_back({k1, 0.0, detail::omega_raw(family, k1, 0.0),
                            group_velocity(family, {k1, 0.0}), true});
        }
        return grid;
    }

    grid.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            DispersionSample row;
            row.k1 = coord(ext1, i);
            row.k2 = coord(ext2, j);
            row.omega = detail::omega_raw(family, row.k1, row.k2);
            if (family == LatticeFamily::triangular) {
                row.in_domain = in_hexagon(row.k1, row.k2);
            } else if (family == LatticeFamily::spacetime_square) {
                row.in_domain = sin_sq_half(row.k1) + sin_sq_half(row.k2) <= 1.0 + kRadicandSlack;
            }
            row.vg = row.in_domain ? group_velocity(family, {row.k1, row.k2})
                                   : std::numeric_limits<double>::quiet_NaN();
            grid.push_back(row);
        }
    }
    return grid;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

}  // namespace

void write_grid_csv(std::ostream& os, const std::vector<DispersionSample>& grid) {
    os << "k1,k2,omega,vg,in_domain\n";
    std::string line;
    for (const auto& row : grid) {
        line.clear();
        append_double(line, row.k1);
        line.push_back(',');
        append_double(line, row.k2);
        line.push_back(',');
        append_double(line, row.omega);
        line.push_back(',');
        append_double(line, row.vg);
        line.push_back(',');
        line.push_back(row.in_domain ? '1' : '0');
        line.push_back('\n');
        os << line;
    }
}

}  // namespace casimir
