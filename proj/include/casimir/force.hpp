#pragma once

#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "casimir/geometry.hpp"
#include "casimir/zero_point.hpp"

namespace casimir {

/// How the constant A is read off the fitted intercept.
/// The 1D force law is written F = -(pi/A) hbar c / (d^(2-b) y^b), the 2D
/// force per unit length as F = -(1/A) hbar c / (d^(3-b) y^b); the pi is kept
/// explicit instead of being absorbed into A.
enum class FitConvention {
    one_d_with_pi,    // A = pi * exp(intercept)
    two_d_per_length, // A = exp(intercept)
};

std::string_view fit_convention_name(FitConvention convention);
FitConvention fit_convention_from_name(std::string_view name);

struct PowerLawFit {
    double A = 0.0;
    double b = 0.0;
    double intercept = 0.0;
    double slope = 0.0;
    double max_abs_residual = 0.0;
    FitConvention convention = FitConvention::two_d_per_length;
    bool magnitude_fit = false;  // fitted |dU/dn| (failure-diagnostic mode)
};

/// Conversion factors from the per-barrier-step energy slope to the reported
/// force density. dn_dy = steps per unit length; per_length_divisor converts
/// the residual barrier normalization (barrier step length); overcount
/// divides out double-counted modes. All 1 for 1D.
struct GeometryFactors {
    double dn_dy = 1.0;
    double per_length_divisor = 1.0;
    double overcount_divisor = 1.0;

    static GeometryFactors of(const LatticeGeometry& geom);
};

/// Not-a-knot spline through the curve samples, differentiated at each
/// sample n. Returns (n, dU/dn) pairs.
std::vector<std::pair<double, double>> spline_derivative(const EnergyCurve& curve);

/// Log-log force-law fit: F(n) = (dU/dn) dn_dy / (per_length * overcount),
/// y = step_perp * n, ordinary least squares on (ln y, -ln F).
/// Derivatives must be strictly positive unless magnitude_fit is set, in
/// which case |dU/dn| is fitted (used to diagnose curves that fail to be
/// power laws, e.g. the discrete-spacetime energies).
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> derivs,
                          const LatticeGeometry& geom, FitConvention convention,
                          bool magnitude_fit = false);

/// Exact 1D Casimir force, -pi/(24 x^2), in hbar c / d^2.
double chain_force_closed_form(double x);

/// The same value derived through the divergent continuum sum regulated by
/// zeta(-1) = -1/12: (pi / (2 x^2)) * (-1/12).
double zeta_force_1d(double x);

/// Dimensional-regularization reference for parallel plates in D dimensions
/// separated by 2a: -D Gamma((D+1)/2) zeta(D+1) / (pi^((D+1)/2) 2^(D+2) a^(D+1)).
double reference_force_eq1(int dimension, double half_separation);

/// JSON with fields {A, b, intercept, slope, max_abs_residual, convention,
/// geometry}.
nlohmann::json fit_to_json(const PowerLawFit& fit, const LatticeGeometry& geom);

}  // namespace casimir
