#pragma once

#include "ddw/airfoil.hpp"
#include "ddw/bezier.hpp"

#include <stdexcept>

namespace ddw {

inline constexpr double kDroopPivotXc = 0.30;
inline constexpr double kDroopMaxDeg = 15.0;
inline constexpr double kDroopDefaultTol = 1e-10;

/// Result of the droop camber morph: the two Bezier camber curves joined
/// at the pivot and the squared C1/C2 continuity gap between them.
struct DroopMorph {
    double droop_deg = 0.0;
    double pivot_xc = kDroopPivotXc;
    BezierCurve leading_curve;    // [0, pivot]
    BezierCurve trailing_curve;   // [pivot, 1]
    double continuity_residual = 0.0;  // c1_gap^2 + c2_gap^2 at the pivot

    /// Morphed camber value from the piecewise curves.
    double camber(double x) const {
        return x <= pivot_xc ? leading_curve.eval(x) : trailing_curve.eval(x);
    }
};

struct DroopResult {
    DroopMorph morph;
    CamberThickness morphed;  // same grid, camber replaced, thickness kept
};

class droop_convergence_error : public std::runtime_error {
public:
    droop_convergence_error(const std::string& what, double best)
        : std::runtime_error(what), best_residual(best) {}
    double best_residual;
};

/// Rotate the leading camber about the 30%-chord pivot by droop_deg
/// (leading-edge-down positive), refit it as a degree-4 Bezier whose
/// control points minimize the C1/C2 continuity gap against the fixed
/// trailing-camber Bezier, and rebuild the camber distribution.
///
/// droop_deg == 0 is an exact identity on the camber grid.
/// Throws droop_convergence_error when the penalty continuation cannot
/// reach tol.
DroopResult apply_droop(const CamberThickness& ct, double droop_deg,
                        double tol = kDroopDefaultTol);

}  // namespace ddw
