#pragma once

#include <vector>

namespace ddw {

/// Scalar Bezier curve z(t) over an abscissa interval [x0, x1], with the
/// abscissa control points spaced uniformly so that x(t) = x0 + (x1-x0)*t.
/// The curve is then a polynomial graph z(x) of the same degree.
class BezierCurve {
public:
    BezierCurve() = default;
    BezierCurve(double x0, double x1, std::vector<double> ctrl);

    double x0() const { return x0_; }
    double x1() const { return x1_; }
    int degree() const { return static_cast<int>(ctrl_.size()) - 1; }
    const std::vector<double>& control() const { return ctrl_; }

    double eval(double x) const;
    double deriv(double x) const;    // dz/dx
    double deriv2(double x) const;   // d2z/dx2

    /// Bernstein basis values B_i(t) for degree n at parameter t.
    static std::vector<double> bernstein(int n, double t);
    /// First and second parameter-derivatives of the basis at t.
    static std::vector<double> bernstein_d1(int n, double t);
    static std::vector<double> bernstein_d2(int n, double t);

private:
    double x0_ = 0.0, x1_ = 1.0;
    std::vector<double> ctrl_;
};

}  // namespace ddw
