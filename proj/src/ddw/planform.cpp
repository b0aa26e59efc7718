#include "ddw/planform.hpp"

#include <cmath>
#include <stdexcept>

namespace ddw {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

double trapezoid_mac(double c1, double c2) {
    // mean aerodynamic chord of a trapezoid with parallel chords c1, c2
    const double s = c1 + c2;
    if (s <= 0.0) return 0.0;
    return 2.0 / 3.0 * (c1 * c1 + c1 * c2 + c2 * c2) / s;
}

}  // namespace

double WingPlanform::chord_at(double y) const {
    const double ay = std::abs(y);
    if (ay <= break_y)
        return root_chord + (break_chord - root_chord) * (break_y > 0.0 ? ay / break_y : 0.0);
    const double w = span / 2.0 - break_y;
    return break_chord + (tip_chord - break_chord) * (w > 0.0 ? (ay - break_y) / w : 0.0);
}

double WingPlanform::x_le_at(double y) const {
    const double ay = std::abs(y);
    const double t_in = std::tan(sweep_in_deg * kDegToRad);
    if (ay <= break_y) return ay * t_in;
    const double t_out = std::tan(sweep_out_deg * kDegToRad);
    return break_y * t_in + (ay - break_y) * t_out;
}

WingPlanform solve_planform(const DesignVector& dv, double ar_ref) {
    if (!(dv.span > 0.0)) throw std::invalid_argument("solve_planform: span must be positive");
    if (!(dv.break_fraction > 0.0 && dv.break_fraction < 1.0))
        throw std::invalid_argument("solve_planform: break_fraction must lie in (0, 1)");
    if (!(ar_ref > 0.0)) throw std::invalid_argument("solve_planform: ar_ref must be positive");

    const double B = dv.span;
    const double half = B / 2.0;
    const double yb = dv.break_fraction * half;
    const double w = half - yb;
    if (half <= 0.0) throw std::invalid_argument("solve_planform: degenerate span weight");

    const double t_in = std::tan(dv.sweep_in_deg * kDegToRad);
    const double t_out = std::tan(dv.sweep_out_deg * kDegToRad);
    const double t_te = std::tan(dv.sweep_te_deg * kDegToRad);

    const double S = B * B / ar_ref;

    // Half-wing area with c_b = c_r - yb*t_in and c_t = c_b - w*(t_out - t_te):
    //   S/2 = c_r*(yb + w) - yb*t_in*(yb/2 + w) - w^2*(t_out - t_te)/2
    const double cr = (S / 2.0 + yb * t_in * (yb / 2.0 + w) + w * w * (t_out - t_te) / 2.0) / half;
    const double cb = cr - yb * t_in;
    const double ct = cb - w * (t_out - t_te);

    WingPlanform p;
    p.root_chord = cr;
    p.break_chord = cb;
    p.tip_chord = ct;
    p.span = B;
    p.break_y = yb;
    p.area = S;
    p.aspect_ratio = ar_ref;
    p.sweep_in_deg = dv.sweep_in_deg;
    p.sweep_out_deg = dv.sweep_out_deg;
    p.sweep_te_deg = dv.sweep_te_deg;

    const double s_in = (cr + cb) / 2.0 * yb;
    const double s_out = (cb + ct) / 2.0 * w;
    const double stot = s_in + s_out;
    p.mac = stot > 0.0
                ? (trapezoid_mac(cr, cb) * s_in + trapezoid_mac(cb, ct) * s_out) / stot
                : 0.0;
    return p;
}

double twist_at(double y, const WingPlanform& planform) {
    const double half = planform.span / 2.0;
    if (y < 0.0 || y > half)
        throw std::invalid_argument("twist_at: station outside half-span");
    if (y <= planform.break_y) return kTwistRootDeg;
    const double f = (y - planform.break_y) / (half - planform.break_y);
    return kTwistRootDeg + (kTwistTipDeg - kTwistRootDeg) * f;
}

FeasibilityResult check_feasibility(const DesignVector& dv, double ar_ref) {
    const WingPlanform p = solve_planform(dv, ar_ref);
    FeasibilityResult r;
    r.feasible = p.tip_chord >= 0.0 && p.break_chord >= 0.0;
    r.margin = std::min(p.tip_chord, p.break_chord) / p.root_chord;
    return r;
}

}  // namespace ddw
