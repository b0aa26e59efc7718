#pragma once

#include "ddw/design_space.hpp"

namespace ddw {

/// Double-delta planform: unswept inboard trailing edge, swept outboard
/// panel, chords closed so that the trapezoid area matches B^2 / ar_ref.
struct WingPlanform {
    double root_chord = 0.0;   // c_r, inches
    double break_chord = 0.0;  // c_b
    double tip_chord = 0.0;    // c_t
    double span = 0.0;         // B
    double break_y = 0.0;      // y_b = BW2 * B / 2
    double area = 0.0;         // S, full wing
    double aspect_ratio = 0.0;
    double mac = 0.0;          // mean aerodynamic chord
    double sweep_in_deg = 0.0;
    double sweep_out_deg = 0.0;
    double sweep_te_deg = 0.0;

    /// Chord at spanwise station |y| <= B/2.
    double chord_at(double y) const;
    /// Leading-edge x at spanwise station (apex at x = 0).
    double x_le_at(double y) const;
};

struct FeasibilityResult {
    bool feasible = false;
    double margin = 0.0;  // min(c_t, c_b) / c_r
};

/// Solve the root chord from area closure S = B^2 / ar_ref and assemble
/// the planform. Throws std::invalid_argument on degenerate closure.
WingPlanform solve_planform(const DesignVector& dv, double ar_ref = 2.5);

/// Twist schedule: +1.5 deg inboard of the break, linear washout to
/// -1.5 deg at the tip. y in [0, B/2]; out of range throws.
double twist_at(double y, const WingPlanform& planform);

/// Tip- and break-chord positivity under the area closure.
FeasibilityResult check_feasibility(const DesignVector& dv, double ar_ref = 2.5);

inline constexpr double kTwistRootDeg = 1.5;
inline constexpr double kTwistTipDeg = -1.5;

}  // namespace ddw
