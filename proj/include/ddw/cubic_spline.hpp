#pragma once

#include <vector>

namespace ddw {

/// Cubic spline interpolant with not-a-knot end conditions.
/// Reproduces polynomials up to cubic degree exactly, which the camber
/// and thickness extraction relies on for analytic test sections.
class CubicSpline {
public:
    CubicSpline() = default;

    /// Build from strictly ascending abscissae. Throws std::invalid_argument
    /// on non-monotone input or fewer than 2 points.
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;

    const std::vector<double>& knots() const { return x_; }
    std::size_t size() const { return x_.size(); }

private:
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at knots
};

}  // namespace ddw
