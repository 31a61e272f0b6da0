#pragma once

#include <iosfwd>
#include <vector>

#include "casimir/geometry.hpp"

namespace casimir {

// Dispersion relations. Frequencies are in units c/d (natural units,
// hbar = c = d = 1) except omega_spacetime_square, which is in radians per
// time step. All of them vanish only at k = 0 inside the first zone.

/// Nearest-neighbour chain: omega = 2 sin(|k|/2). Requires |k| <= pi.
double omega_chain(double k);

/// Square lattice: omega = 2 sqrt(sin^2(k1/2) + sin^2(k2/2)).
/// Requires k inside the first Brillouin zone [-pi, pi]^2.
double omega_square(Wavevector k);

/// Square lattice in the frame rotated 45 degrees to the barriers:
/// omega = 2 sqrt(1 - cos(k_par/sqrt2) cos(k_perp/sqrt2)).
/// Requires |k_par|, |k_perp| <= sqrt(2) pi (the rotated periodicity cell).
double omega_diagonal(double k_par, double k_perp);

/// Triangular lattice, speed-normalised so the long-wave limit is omega = |k|:
/// omega = (2/sqrt3) sqrt(3 - cos kx - 2 cos(sqrt3 ky / 2) cos(kx/2)).
/// Requires (kx, ky) inside the hexagonal first Brillouin zone.
double omega_triangular(double kx, double ky);

/// Fully discrete spacetime, square lattice:
/// omega = 2 arcsin(sqrt(sin^2(k1/2) + sin^2(k2/2))).
/// Only defined while sin^2(k1/2) + sin^2(k2/2) <= 1; beyond that the mode
/// does not propagate and the call throws std::domain_error.
double omega_spacetime_square(Wavevector k);

/// First-Brillouin-zone membership test (hexagon for the triangular family,
/// rotated periodicity cell for the diagonal family, squares otherwise).
bool in_first_zone(LatticeFamily family, Wavevector k);

/// |grad_k omega| by central finite differences with step 1e-6 rad, in units
/// of c. The wavevector must lie strictly inside the zone. For the spacetime
/// square family the result is NaN when the stencil crosses the propagation
/// cutoff. Not available for the spacetime chain (its dispersion is trivially
/// omega = k and is represented only through the closed-form energy).
double group_velocity(LatticeFamily family, Wavevector k);

struct DispersionSample {
    double k1 = 0.0;
    double k2 = 0.0;
    double omega = 0.0;
    double vg = 0.0;
    bool in_domain = true;
};

/// Uniform sampling of the zone: resolution^2 rows for 2D families,
/// resolution rows for the chain. Spacetime rows outside the propagation
/// cutoff carry in_domain = false and NaN omega/vg; triangular rows outside
/// the hexagon (the sampling covers its bounding box) carry in_domain = false
/// with omega evaluated on the periodic extension.
std::vector<DispersionSample> dispersion_grid(LatticeFamily family, int resolution);

/// CSV with header `k1,k2,omega,vg,in_domain`, full float precision.
void write_grid_csv(std::ostream& os, const std::vector<DispersionSample>& grid);

namespace detail {
/// Dispersion without zone checks (periodic extension); NaN outside the
/// spacetime propagation domain. Backbone for grids and finite differences.
double omega_raw(LatticeFamily family, double k1, double k2);
}  // namespace detail

}  // namespace casimir
