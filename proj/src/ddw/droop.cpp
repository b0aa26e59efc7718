#include "ddw/droop.hpp"

#include "ddw/cubic_spline.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace ddw {

namespace {

constexpr int kDegree = 4;
constexpr int kMaxPenaltySteps = 40;

// Least-squares fit of the trailing camber on [pivot, 1] with the first
// control point anchored at the pivot camber value.
BezierCurve fit_trailing(const std::vector<double>& xs, const std::vector<double>& zs,
                         double pivot, double z_pivot) {
    const auto m = static_cast<Eigen::Index>(xs.size());
    Eigen::MatrixXd A(m, kDegree);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double t = (xs[i] - pivot) / (1.0 - pivot);
        const auto basis = BezierCurve::bernstein(kDegree, t);
        for (int j = 1; j <= kDegree; ++j) A(i, j - 1) = basis[j];
        b(i) = zs[i] - basis[0] * z_pivot;
    }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    std::vector<double> ctrl(kDegree + 1);
    ctrl[0] = z_pivot;
    for (int j = 1; j <= kDegree; ++j) ctrl[j] = c(j - 1);
    return BezierCurve(pivot, 1.0, std::move(ctrl));
}

// Linear functionals giving the leading curve's dz/dx and d2z/dx2 at the
// pivot (t = 1) in terms of its control points.
void pivot_derivative_rows(double span, Eigen::RowVectorXd& d1, Eigen::RowVectorXd& d2) {
    const auto b1 = BezierCurve::bernstein_d1(kDegree, 1.0);
    const auto b2 = BezierCurve::bernstein_d2(kDegree, 1.0);
    d1.resize(kDegree + 1);
    d2.resize(kDegree + 1);
    for (int j = 0; j <= kDegree; ++j) {
        d1(j) = b1[j] / span;
        d2(j) = b2[j] / (span * span);
    }
}

}  // namespace

DroopResult apply_droop(const CamberThickness& ct, double droop_deg, double tol) {
    ct.validate();
    const double pivot = kDroopPivotXc;
    if (!(ct.grid.front() < pivot && pivot < ct.grid.back()))
        throw std::invalid_argument("apply_droop: pivot outside camber grid");
    if (std::abs(droop_deg) > kDroopMaxDeg)
        throw std::invalid_argument("apply_droop: |droop| exceeds 15 degrees");
    if (!(tol > 0.0)) throw std::invalid_argument("apply_droop: tol must be positive");

    DroopResult res;
    res.morph.droop_deg = droop_deg;

    if (droop_deg == 0.0) {
        // identity morph: camber grid passes through untouched
        res.morphed = ct;
        const CubicSpline base(ct.grid, ct.camber);
        const double zp = base.eval(pivot);
        // descriptive curves: straight extensions matching value and slope
        const double s = base.deriv(pivot);
        auto line = [&](double x0, double x1) {
            std::vector<double> c(kDegree + 1);
            for (int j = 0; j <= kDegree; ++j) {
                const double x = x0 + (x1 - x0) * j / kDegree;
                c[j] = zp + s * (x - pivot);
            }
            return BezierCurve(x0, x1, std::move(c));
        };
        res.morph.leading_curve = line(0.0, pivot);
        res.morph.trailing_curve = line(pivot, 1.0);
        res.morph.continuity_residual = 0.0;
        return res;
    }

    const CubicSpline base(ct.grid, ct.camber);
    const double zp = base.eval(pivot);

    // trailing region samples: pivot value plus existing grid points
    std::vector<double> tx{pivot}, tz{zp};
    for (std::size_t i = 0; i < ct.grid.size(); ++i)
        if (ct.grid[i] > pivot) {
            tx.push_back(ct.grid[i]);
            tz.push_back(ct.camber[i]);
        }
    const BezierCurve trailing = fit_trailing(tx, tz, pivot, zp);
    const double g1 = trailing.deriv(pivot);
    const double g2 = trailing.deriv2(pivot);

    // leading region samples, rotated about (pivot, zp); positive droop
    // lowers the leading edge
    const double th = droop_deg * M_PI / 180.0;
    const double ct_ = std::cos(th), st = std::sin(th);
    std::vector<double> lx, lz;
    for (std::size_t i = 0; i < ct.grid.size(); ++i)
        if (ct.grid[i] <= pivot) {
            const double dx = ct.grid[i] - pivot;
            const double dz = ct.camber[i] - zp;
            lx.push_back(pivot + dx * ct_ - dz * st);
            lz.push_back(zp + dx * st + dz * ct_);
        }
    lx.push_back(pivot);
    lz.push_back(zp);

    // free controls l0..l3 (l4 anchored at zp); penalty continuation on the
    // C1/C2 gaps against the trailing curve
    const auto m = static_cast<Eigen::Index>(lx.size());
    Eigen::MatrixXd F(m, kDegree);
    Eigen::VectorXd f(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double t = lx[i] / pivot;
        const auto basis = BezierCurve::bernstein(kDegree, t);
        for (int j = 0; j < kDegree; ++j) F(i, j) = basis[j];
        f(i) = lz[i] - basis[kDegree] * zp;
    }
    Eigen::RowVectorXd d1, d2;
    pivot_derivative_rows(pivot, d1, d2);

    double best_residual = std::numeric_limits<double>::infinity();
    std::vector<double> best_ctrl;
    double mu = 1.0;
    for (int step = 0; step < kMaxPenaltySteps; ++step, mu *= 10.0) {
        const double w = std::sqrt(mu);
        Eigen::MatrixXd A(m + 2, kDegree);
        Eigen::VectorXd b(m + 2);
        A.topRows(m) = F;
        b.head(m) = f;
        for (int j = 0; j < kDegree; ++j) {
            A(m, j) = w * d1(j);
            A(m + 1, j) = w * d2(j);
        }
        b(m) = w * (g1 - d1(kDegree) * zp);
        b(m + 1) = w * (g2 - d2(kDegree) * zp);

        Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
        std::vector<double> ctrl(kDegree + 1);
        for (int j = 0; j < kDegree; ++j) ctrl[j] = c(j);
        ctrl[kDegree] = zp;

        BezierCurve lead(0.0, pivot, ctrl);
        const double c1 = lead.deriv(pivot) - g1;
        const double c2 = lead.deriv2(pivot) - g2;
        const double residual = c1 * c1 + c2 * c2;
        if (residual < best_residual) {
            best_residual = residual;
            best_ctrl = ctrl;
        }
        if (best_residual <= tol) break;
    }
    if (best_residual > tol)
        throw droop_convergence_error("apply_droop: continuity residual above tolerance",
                                      best_residual);

    res.morph.leading_curve = BezierCurve(0.0, pivot, best_ctrl);
    res.morph.trailing_curve = trailing;
    {
        const double c1 = res.morph.leading_curve.deriv(pivot) - g1;
        const double c2 = res.morph.leading_curve.deriv2(pivot) - g2;
        res.morph.continuity_residual = c1 * c1 + c2 * c2;
    }

    res.morphed.grid = ct.grid;
    res.morphed.thickness = ct.thickness;
    res.morphed.camber.resize(ct.grid.size());
    for (std::size_t i = 0; i < ct.grid.size(); ++i)
        res.morphed.camber[i] = res.morph.camber(ct.grid[i]);
    return res;
}

}  // namespace ddw
