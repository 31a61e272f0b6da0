#include "casimir/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace casimir {

CubicSpline::CubicSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
    const std::size_t m = x_.size();
    if (m != y_.size()) throw std::invalid_argument("spline: x and y sizes differ");
    if (m < 4) throw std::invalid_argument("spline: at least 4 samples required");
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!(x_[i + 1] > x_[i])) {
            throw std::invalid_argument("spline: abscissae must be strictly increasing");
        }
    }

    std::vector<double> h(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) h[i] = x_[i + 1] - x_[i];

    // Second-derivative continuity at interior knots gives a tridiagonal
    // system in the moments M_1..M_{m-2}; the not-a-knot conditions express
    // M_0 and M_{m-1} through their neighbours and fold into the first and
    // last rows.
    const std::size_t n = m - 2;
    std::vector<double> sub(n), diag(n), sup(n), rhs(n);
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const std::size_t j = i - 1;
        sub[j] = h[i - 1] / 6.0;
        diag[j] = (h[i - 1] + h[i]) / 3.0;
        sup[j] = h[i] / 6.0;
        rhs[j] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
    }
    {
        const double r01 = h[0] / h[1];
        diag[0] += h[0] / 6.0 * (1.0 + r01);
        sup[0] -= h[0] / 6.0 * r01;
    }
    {
        const double rlast = h[m - 2] / h[m - 3];
        diag[n - 1] += h[m - 2] / 6.0 * (1.0 + rlast);
        sub[n - 1] -= h[m - 2] / 6.0 * rlast;
    }

    // Thomas elimination.
    for (std::size_t j = 1; j < n; ++j) {
        const double w = sub[j] / diag[j - 1];
        diag[j] -= w * sup[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    std::vector<double> mm(n);
    mm[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) {
        mm[j] = (rhs[j] - sup[j] * mm[j + 1]) / diag[j];
    }

    m_.assign(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) m_[j + 1] = mm[j];
    m_[0] = m_[1] + (m_[1] - m_[2]) * h[0] / h[1];
    m_[m - 1] = m_[m - 2] + (m_[m - 2] - m_[m - 3]) * h[m - 2] / h[m - 3];
}

std::size_t CubicSpline::interval(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::ptrdiff_t idx = (it - x_.begin()) - 1;
    return static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(x_.size()) - 2));
}

double CubicSpline::value(double x) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = x_[i + 1] - x;
    const double b = x - x_[i];
    return m_[i] * a * a * a / (6.0 * h) + m_[i + 1] * b * b * b / (6.0 * h) +
           (y_[i] - m_[i] * h * h / 6.0) * a / h +
           (y_[i + 1] - m_[i + 1] * h * h / 6.0) * b / h;
}

double CubicSpline::derivative(double x) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = x_[i + 1] - x;
    const double b = x - x_[i];
    return -m_[i] * a * a / (2.0 * h) + m_[i + 1] * b * b / (2.0 * h) +
           (y_[i + 1] - y_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
}

}  // namespace casimir
