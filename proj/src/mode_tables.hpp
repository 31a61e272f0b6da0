#pragma once

// Internal: precomputed per-index factors for the bounded-region mode sums.
// Shared by the spectrum builder and the zero-point energies so that both
// evaluate bit-identical expressions.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"

namespace casimir::detail {

constexpr double kTablePi = 3.14159265358979323846;
constexpr double kNegativeRadicandSlack = 1e-12;

/// omega/2 values of a bounded region, evaluated lazily from per-index
/// tables. Flat index i maps to (r, s) = (i / s_count + 1, i % s_count + 1).
struct ModeTable {
    LatticeFamily family = LatticeFamily::chain;
    int r_count = 0;
    int s_count = 1;
    std::vector<double> ra;  // per-r factor
    std::vector<double> rb;  // second per-r factor (triangular only)
    std::vector<double> sa;  // per-s factor

    std::size_t size() const {
        return static_cast<std::size_t>(r_count) * static_cast<std::size_t>(s_count);
    }

    double half_omega(std::size_t flat) const {
        const std::size_t r = flat / static_cast<std::size_t>(s_count);
        const std::size_t s = flat % static_cast<std::size_t>(s_count);
        switch (family) {
            case LatticeFamily::chain:
                return ra[r];
            case LatticeFamily::square:
                return std::sqrt(ra[r] + sa[s]);
            case LatticeFamily::square_diagonal:
                return checked_sqrt(1.0 - ra[r] * sa[s]);
            case LatticeFamily::triangular:
                return checked_sqrt(3.0 - ra[r] - 2.0 * sa[s] * rb[r]) / std::sqrt(3.0);
            case LatticeFamily::spacetime_square: {
                // here r is the perpendicular index and s the barrier one
                const double arg = ra[r] + sa[s];
                if (arg > 1.0) {
                    if (arg > 1.0 + kNegativeRadicandSlack) {
                        throw std::domain_error(
                            "mode beyond the discrete-time propagation cutoff: "
                            "sin^2 sum = " + std::to_string(arg));
                    }
                    return std::asin(1.0);
                }
                return std::asin(std::sqrt(arg));
            }
            case LatticeFamily::spacetime_chain:
                break;
        }
        throw std::logic_error("mode table built for unsupported family");
    }

private:
    static double checked_sqrt(double radicand) {
        if (radicand < 0.0) {
            if (radicand < -kNegativeRadicandSlack) {
                throw std::domain_error("mode radicand negative beyond rounding: " +
                                        std::to_string(radicand));
            }
            return 0.0;
        }
        return std::sqrt(radicand);
    }
};

/// Builds the table for a region of gap_steps perpendicular steps.
/// r_limit < 0 keeps the full barrier-direction range; otherwise the
/// (possibly chopped) outer index runs 1..r_limit. For the chain, r_limit
/// truncates the single perpendicular index while the quantization
/// denominator stays (gap_steps + 1).
inline ModeTable make_mode_table(const LatticeGeometry& geom, int gap_steps,
                                 int r_limit = -1) {
    if (gap_steps < 1) throw std::invalid_argument("gap_steps must be >= 1");
    ModeTable t;
    t.family = geom.family();
    const double denom = 2.0 * (gap_steps + 1.0);
    switch (geom.family()) {
        case LatticeFamily::chain: {
            t.r_count = r_limit < 0 ? gap_steps : r_limit;
            t.s_count = 1;
            t.ra.resize(t.r_count);
            for (int r = 1; r <= t.r_count; ++r) {
                t.ra[r - 1] = std::sin(kTablePi * r / denom);
            }
            t.sa.assign(1, 0.0);
            return t;
        }
        case LatticeFamily::square: {
            t.r_count = r_limit < 0 ? geom.nx() : r_limit;
            t.s_count = gap_steps;
            t.ra.resize(t.r_count);
            for (int r = 1; r <= t.r_count; ++r) {
                const double v = std::sin(kTablePi * r / geom.nx());
                t.ra[r - 1] = v * v;
            }
            t.sa.resize(gap_steps);
            for (int s = 1; s <= gap_steps; ++s) {
                const double v = std::sin(kTablePi * s / denom);
                t.sa[s - 1] = v * v;
            }
            return t;
        }
        case LatticeFamily::square_diagonal: {
            t.r_count = r_limit < 0 ? geom.nx() : r_limit;
            t.s_count = gap_steps;
            t.ra.resize(t.r_count);
            for (int r = 1; r <= t.r_count; ++r) {
                t.ra[r - 1] = std::cos(2.0 * kTablePi * r / geom.nx());
            }
            t.sa.resize(gap_steps);
            for (int s = 1; s <= gap_steps; ++s) {
                t.sa[s - 1] = std::cos(kTablePi * s / (gap_steps + 1.0));
            }
            return t;
        }
        case LatticeFamily::triangular: {
            t.r_count = r_limit < 0 ? geom.nx() : r_limit;
            t.s_count = gap_steps;
            t.ra.resize(t.r_count);
            t.rb.resize(t.r_count);
            for (int r = 1; r <= t.r_count; ++r) {
                t.ra[r - 1] = std::cos(2.0 * kTablePi * r / geom.nx());
                t.rb[r - 1] = std::cos(kTablePi * r / geom.nx());
            }
            t.sa.resize(gap_steps);
            for (int s = 1; s <= gap_steps; ++s) {
                t.sa[s - 1] = std::cos(kTablePi * s / (gap_steps + 1.0));
            }
            return t;
        }
        case LatticeFamily::spacetime_chain:
        case LatticeFamily::spacetime_square:
            break;
    }
    throw std::invalid_argument("spacetime families have dedicated energy operations");
}

/// Table for the discrete-spacetime square region: perpendicular index outer
/// (1..perp_limit, quantized against gap_steps), barrier index inner
/// (1..barrier_limit out of nx).
inline ModeTable make_spacetime_table(int nx, int gap_steps, int perp_limit,
                                      int barrier_limit) {
    ModeTable t;
    t.family = LatticeFamily::spacetime_square;
    t.r_count = perp_limit;
    t.s_count = barrier_limit;
    t.ra.resize(std::max(perp_limit, 0));
    const double denom = 2.0 * (gap_steps + 1.0);
    for (int r = 1; r <= perp_limit; ++r) {
        const double v = std::sin(kTablePi * r / denom);
        t.ra[r - 1] = v * v;
    }
    t.sa.resize(std::max(barrier_limit, 0));
    for (int g = 1; g <= barrier_limit; ++g) {
        const double v = std::sin(kTablePi * g / nx);
        t.sa[g - 1] = v * v;
    }
    return t;
}

}  // namespace casimir::detail
