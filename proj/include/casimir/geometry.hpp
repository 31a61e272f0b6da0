#pragma once

#include <string>
#include <string_view>

namespace casimir {

/// Lattice families supported by the energy pipeline.
///
/// The first four keep time continuous (only space is discretized); the
/// spacetime variants discretize the time axis as well and are handled by
/// dedicated closed-form / truncated-sum energies.
enum class LatticeFamily {
    chain,
    square,
    square_diagonal,
    triangular,
    spacetime_chain,
    spacetime_square,
};

std::string_view family_name(LatticeFamily family);
LatticeFamily family_from_name(std::string_view name);  // throws std::invalid_argument

bool family_is_spacetime(LatticeFamily family);
bool family_is_two_d(LatticeFamily family);

/// Wavevector in radians per lattice step. k2 is ignored for 1D families.
/// Component conventions per family:
///   square / spacetime_square : (k1, k2) Cartesian along the lattice axes
///   square_diagonal           : (k1, k2) = (k_parallel, k_perpendicular) in
///                               the frame rotated 45 degrees to the barriers
///   triangular                : (k1, k2) = (kx, ky) Cartesian
struct Wavevector {
    double k1 = 0.0;
    double k2 = 0.0;
};

/// Geometry of a bounded lattice: Nx periodic steps along the barrier
/// direction, Ny steps between the fixed end barriers, plus the
/// family-locked step/length/overcount factors used by the force extraction.
///
/// All lengths are in units of the lattice spacing d.
class LatticeGeometry {
public:
    static LatticeGeometry chain(int n_steps);
    static LatticeGeometry square(int nx, int ny);
    static LatticeGeometry square_diagonal(int n1, int n2);
    static LatticeGeometry triangular(int nx, int ny);
    static LatticeGeometry spacetime_chain(int n_steps);
    static LatticeGeometry spacetime_square(int nx, int ny);

    /// Factory keyed by family; 1D families take ny as the step count and
    /// ignore nx (they carry a nominal Nx = 2).
    static LatticeGeometry make(LatticeFamily family, int nx, int ny);

    LatticeFamily family() const { return family_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }

    /// Length of one perpendicular step (1, sqrt(2)/2 or sqrt(3)/2).
    double step_perp() const { return step_perp_; }
    /// Barrier length in units d.
    double barrier_length() const { return barrier_length_; }
    /// Mode double-counting divisor (2 for the diagonal barriers, else 1).
    double mode_overcount() const { return mode_overcount_; }

    bool is_two_d() const { return family_is_two_d(family_); }
    bool is_spacetime() const { return family_is_spacetime(family_); }

private:
    LatticeGeometry(LatticeFamily family, int nx, int ny);

    LatticeFamily family_;
    int nx_;
    int ny_;
    double step_perp_;
    double barrier_length_;
    double mode_overcount_;
};

}  // namespace casimir
