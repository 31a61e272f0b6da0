#include "casimir/force.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "casimir/spline.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::string_view fit_convention_name(FitConvention convention) {
    return convention == FitConvention::one_d_with_pi ? "1d-with-pi" : "2d-per-length";
}

FitConvention fit_convention_from_name(std::string_view name) {
    if (name == "1d-with-pi") return FitConvention::one_d_with_pi;
    if (name == "2d-per-length") return FitConvention::two_d_per_length;
    throw std::invalid_argument("unknown fit convention: " + std::string(name));
}

GeometryFactors GeometryFactors::of(const LatticeGeometry& geom) {
    GeometryFactors f;
    if (!geom.is_two_d()) return f;  // all 1 for 1D
    f.dn_dy = 1.0 / geom.step_perp();
    // Curves carry per-barrier-step energies (already divided by Nx); what is
    // left of the per-unit-length normalization is the barrier step length.
    f.per_length_divisor = geom.barrier_length() / geom.nx();
    f.overcount_divisor = geom.mode_overcount();
    return f;
}

std::vector<std::pair<double, double>> spline_derivative(const EnergyCurve& curve) {
    const auto& samples = curve.samples;
    std::vector<double> xs(samples.size()), ys(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        xs[i] = static_cast<double>(samples[i].n);
        ys[i] = samples[i].energy;
    }
    const CubicSpline spline(xs, ys);  // rejects < 4 or duplicate abscissae
    std::vector<std::pair<double, double>> derivs(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        derivs[i] = {xs[i], spline.derivative(xs[i])};
    }
    return derivs;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> derivs,
                          const LatticeGeometry& geom, FitConvention convention,
                          bool magnitude_fit) {
    if (derivs.size() < 3) {
        throw std::invalid_argument("fit_power_law: at least 3 derivative points required");
    }
    const GeometryFactors factors = GeometryFactors::of(geom);
    const double force_scale =
        factors.dn_dy / (factors.per_length_divisor * factors.overcount_divisor);

    std::vector<double> lx(derivs.size()), ly(derivs.size());
    for (std::size_t i = 0; i < derivs.size(); ++i) {
        const double n = derivs[i].first;
        double slope_u = derivs[i].second;
        if (magnitude_fit) slope_u = std::abs(slope_u);
        if (!(slope_u > 0.0)) {
            throw std::invalid_argument(
                "fit_power_law: nonpositive energy slope at n = " + std::to_string(n) +
                " (no force law to fit)");
        }
        const double force = slope_u * force_scale;
        lx[i] = std::log(geom.step_perp() * n);
        ly[i] = -std::log(force);
    }

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mean_x += lx[i];
        mean_y += ly[i];
    }
    mean_x /= static_cast<double>(lx.size());
    mean_y /= static_cast<double>(lx.size());

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mean_x) * (lx[i] - mean_x);
        sxy += (lx[i] - mean_x) * (ly[i] - mean_y);
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("fit_power_law: degenerate abscissae");
    }

    PowerLawFit fit;
    fit.convention = convention;
    fit.magnitude_fit = magnitude_fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.b = fit.slope;
    fit.A = convention == FitConvention::one_d_with_pi ? kPi * std::exp(fit.intercept)
                                                       : std::exp(fit.intercept);
    double max_resid = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        max_resid = std::max(max_resid,
                             std::abs(ly[i] - (fit.intercept + fit.slope * lx[i])));
    }
    fit.max_abs_residual = max_resid;
    return fit;
}

double chain_force_closed_form(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("force: separation must be positive");
    return -(kPi / (24.0 * x * x));
}

double zeta_force_1d(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("force: separation must be positive");
    // The continuum mode sum leaves (pi/(2x^2)) * sum(r); the divergent sum
    // is assigned zeta(-1) = -1/12.
    const double regulated_sum = -1.0 / 12.0;
    return (kPi / (2.0 * x * x)) * regulated_sum;
}

double reference_force_eq1(int dimension, double half_separation) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(half_separation > 0.0)) throw std::invalid_argument("half separation must be positive");
    const double d = static_cast<double>(dimension);
    return -d * std::tgamma((d + 1.0) / 2.0) * std::riemann_zeta(d + 1.0) /
           (std::pow(kPi, (d + 1.0) / 2.0) * std::pow(2.0, d + 2.0) *
            std::pow(half_separation, d + 1.0));
}

nlohmann::json fit_to_json(const PowerLawFit& fit, const LatticeGeometry& geom) {
    return nlohmann::json{
        {"A", fit.A},
        {"b", fit.b},
        {"intercept", fit.intercept},
        {"slope", fit.slope},
        {"max_abs_residual", fit.max_abs_residual},
        {"convention", fit_convention_name(fit.convention)},
        {"magnitude_fit", fit.magnitude_fit},
        {"geometry",
         {{"family", family_name(geom.family())},
          {"Nx", geom.nx()},
          {"Ny", geom.ny()},
          {"step_perp", geom.step_perp()},
          {"barrier_length", geom.barrier_length()},
          {"mode_overcount", geom.mode_overcount()}}},
    };
}

}  // namespace casimir
