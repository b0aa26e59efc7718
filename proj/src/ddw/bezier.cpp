#include "ddw/bezier.hpp"

#include <cmath>
#include <stdexcept>

namespace ddw {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

BezierCurve::BezierCurve(double x0, double x1, std::vector<double> ctrl)
    : x0_(x0), x1_(x1), ctrl_(std::move(ctrl)) {
    if (!(x1_ > x0_)) throw std::invalid_argument("BezierCurve: empty abscissa interval");
    if (ctrl_.size() < 2) throw std::invalid_argument("BezierCurve: need degree >= 1");
}

std::vector<double> BezierCurve::bernstein(int n, double t) {
    std::vector<double> b(n + 1);
    for (int i = 0; i <= n; ++i)
        b[i] = binom(n, i) * std::pow(t, i) * std::pow(1.0 - t, n - i);
    return b;
}

std::vector<double> BezierCurve::bernstein_d1(int n, double t) {
    // d/dt B_{i,n}(t) = n (B_{i-1,n-1} - B_{i,n-1})
    std::vector<double> d(n + 1, 0.0);
    const auto lower = bernstein(n - 1, t);
    for (int i = 0; i <= n; ++i) {
        double v = 0.0;
        if (i >= 1) v += lower[i - 1];
        if (i <= n - 1) v -= lower[i];
        d[i] = n * v;
    }
    return d;
}

std::vector<double> BezierCurve::bernstein_d2(int n, double t) {
    std::vector<double> d(n + 1, 0.0);
    if (n < 2) return d;
    const auto lower = bernstein(n - 2, t);
    for (int i = 0; i <= n; ++i) {
        double v = 0.0;
        if (i >= 2) v += lower[i - 2];
        if (i >= 1 && i <= n - 1) v -= 2.0 * lower[i - 1];
        if (i <= n - 2) v += lower[i];
        d[i] = n * (n - 1) * v;
    }
    return d;
}

double BezierCurve::eval(double x) const {
    const int n = degree();
    const double t = (x - x0_) / (x1_ - x0_);
    const auto b = bernstein(n, t);
    double z = 0.0;
    for (int i = 0; i <= n; ++i) z += b[i] * ctrl_[i];
    return z;
}

double BezierCurve::deriv(double x) const {
    const int n = degree();
    const double L = x1_ - x0_;
    const double t = (x - x0_) / L;
    const auto d = bernstein_d1(n, t);
    double z = 0.0;
    for (int i = 0; i <= n; ++i) z += d[i] * ctrl_[i];
    return z / L;
}

double BezierCurve::deriv2(double x) const {
    const int n = degree();
    const double L = x1_ - x0_;
    const double t = (x - x0_) / L;
    const auto d = bernstein_d2(n, t);
    double z = 0.0;
    for (int i = 0; i <= n; ++i) z += d[i] * ctrl_[i];
    return z / (L * L);
}

}  // namespace ddw
