#include "ddw/cubic_spline.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace ddw {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const auto n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("CubicSpline: need at least 2 matching points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("CubicSpline: abscissae must be strictly ascending");

    m_.assign(n, 0.0);
    if (n == 2) return;  // linear segment, M = 0

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    auto h = [&](std::size_t i) { return x_[i + 1] - x_[i]; };

    for (std::size_t i = 1; i + 1 < n; ++i) {
        A(i, i - 1) = h(i - 1) / 6.0;
        A(i, i) = (h(i - 1) + h(i)) / 3.0;
        A(i, i + 1) = h(i) / 6.0;
        b(i) = (y_[i + 1] - y_[i]) / h(i) - (y_[i] - y_[i - 1]) / h(i - 1);
    }
    if (n == 3) {
        // single interior equation; close with natural ends
        A(0, 0) = 1.0;
        A(n - 1, n - 1) = 1.0;
    } else {
        // not-a-knot: continuous third derivative at the second and
        // second-to-last knots
        A(0, 0) = h(1);
        A(0, 1) = -(h(0) + h(1));
        A(0, 2) = h(0);
        A(n - 1, n - 3) = h(n - 2);
        A(n - 1, n - 2) = -(h(n - 3) + h(n - 2));
        A(n - 1, n - 1) = h(n - 3);
    }

    Eigen::VectorXd m = A.partialPivLu().solve(b);
    for (std::size_t i = 0; i < n; ++i) m_[i] = m(i);
}

std::size_t CubicSpline::interval(double x) const {
    // index i with x_[i] <= x < x_[i+1]; ends clamp to the terminal cubic
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    auto i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double CubicSpline::eval(double x) const {
    const auto i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double bfrac = (x - x_[i]) / h;
    return a * y_[i] + bfrac * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (bfrac * bfrac * bfrac - bfrac) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::deriv(double x) const {
    const auto i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double bfrac = (x - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h +
           ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * bfrac * bfrac - 1.0) * m_[i + 1]) * h / 6.0;
}

double CubicSpline::deriv2(double x) const {
    const auto i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double bfrac = (x - x_[i]) / h;
    return a * m_[i] + bfrac * m_[i + 1];
}

}  // namespace ddw
