#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "casimir/geometry.hpp"

namespace casimir {

/// Which sum index a chop truncates.
enum class ChopAxis {
    perpendicular,  // 1D: the r-index of the environment sum
    barrier,        // 2D: the barrier-direction index of both sums
};

std::string_view chop_axis_name(ChopAxis axis);
ChopAxis chop_axis_from_name(std::string_view name);

/// Truncation of the highest-index mode contributions.
///
/// Semantics by family:
///   2D Hamiltonian families (axis = barrier): the barrier-direction upper
///   limit of both the gap and the environment sum drops from Nx to
///   floor((1 - fraction) * Nx).
///   Chain (axis = perpendicular): the environment sum loses its top
///   floor(fraction * Ny) modes; the gap sum is untouched. A sweep-dependent
///   truncation of both limits makes the removed mode count jump inside a
///   sweep window, which destroys the force fit, so the truncated count is
///   anchored to the fixed lattice size.
struct ChopSpec {
    double fraction = 0.0;
    ChopAxis applies_to = ChopAxis::perpendicular;

    static ChopSpec none() { return {}; }
    static ChopSpec top_fraction(double fraction, ChopAxis axis);

    bool active() const { return fraction > 0.0; }
};

struct EnergySample {
    int n = 0;        // gap steps
    double energy = 0.0;  // hbar c / d
};

struct SpacetimeTruncation {
    double barrier_divisor = 4.001;  // barrier index runs to floor(Nx / this)
    double perp_divisor = 2.0;       // perpendicular index to floor(n / this)
};

/// Sampled (n, U_S(n)) pairs, strictly increasing in n. 2D samples are
/// per-barrier-step energies (divided by Nx); 1D samples are totals.
struct EnergyCurve {
    LatticeGeometry geom = LatticeGeometry::chain(2);
    std::vector<EnergySample> samples;
    ChopSpec chop;
    SpacetimeTruncation truncation;  // meaningful for the spacetime square only
};

/// Zero-point energy sum(omega / 2) of a region spanning n perpendicular
/// steps. Hamiltonian families only; the chain rejects an active chop (1D
/// chopping is defined on the system split, see ChopSpec).
double gap_energy(const LatticeGeometry& geom, int n, const ChopSpec& chop = {});

/// gap + environment energy for barrier position n (1 <= n <= Ny - 1).
/// The environment term is quantized against Ny - n steps.
double system_energy(const LatticeGeometry& geom, int n, const ChopSpec& chop = {});

/// Exact closed form of the chain gap sum via Lagrange's trigonometric
/// identity: sin(n pi / (4(n+1))) sin(pi/4) / sin(pi / (4(n+1))).
double lagrange_gap_sum(int n);

/// Large-n form of the same sum, cot(pi / (4(n+1))) / 2. Exceeds the exact
/// sum by 1/2 + O(1/n).
double lagrange_gap_sum_asymptotic(int n);

/// Closed-form chain system energy, lagrange_gap_sum(n) + lagrange_gap_sum(N-n).
double system_energy_chain_closed(int n, int total_steps);

/// Discrete-spacetime chain: U_S = pi N / 4 for every barrier position, so
/// the force vanishes identically.
double spacetime_chain_system_energy(int n, int total_steps);

/// Discrete-spacetime square system energy per barrier step:
/// (1/Nx) [ sum_{r<=floor(n/perp)} sum_{g<=floor(Nx/barrier)}
///            arcsin(sqrt(sin^2(r pi/(2(n+1))) + sin^2(g pi/Nx)))  +  (n -> Ny-n) ].
/// The divisors keep every summand inside the arcsin domain (the
/// discrete-time propagation cutoff); violations throw std::domain_error.
double spacetime_square_system_energy(int n, int nx, int ny,
                                      double barrier_divisor = 4.001,
                                      double perp_divisor = 2.0);

/// Samples the system energy at n = n_start, n_start + step, ... <= n_end.
/// 2D families are divided by Nx (per-barrier-step normalization folded in
/// early); spacetime families dispatch to their dedicated energies. At least
/// 4 samples are required.
EnergyCurve energy_curve(const LatticeGeometry& geom, int n_start, int n_end,
                         int step, const ChopSpec& chop = {},
                         const SpacetimeTruncation& truncation = {});

/// CSV with header `n,energy`, full float precision.
void write_curve_csv(std::ostream& os, const EnergyCurve& curve);

/// JSON sidecar with geometry, chop and normalization metadata.
nlohmann::json curve_metadata(const EnergyCurve& curve);

}  // namespace casimir
