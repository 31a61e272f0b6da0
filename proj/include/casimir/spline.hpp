#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace casimir {

/// Interpolating cubic spline with not-a-knot end conditions (third
/// derivative continuous across the first and last interior knots). Needs at
/// least 4 strictly increasing abscissae and reproduces cubic polynomials
/// exactly.
class CubicSpline {
public:
    CubicSpline(std::span<const double> x, std::span<const double> y);

    double value(double x) const;
    double derivative(double x) const;
    std::size_t size() const { return x_.size(); }

private:
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace casimir
