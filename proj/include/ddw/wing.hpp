#pragma once

#include "ddw/airfoil.hpp"
#include "ddw/cubic_spline.hpp"
#include "ddw/droop.hpp"
#include "ddw/planform.hpp"

#include <string>
#include <vector>

namespace ddw {

struct WingSection {
    double y = 0.0;          // spanwise station, inches
    double chord = 0.0;      // inches
    double twist_deg = 0.0;
    double x_le = 0.0;       // leading-edge x, apex at origin
};

struct WingBuildOptions {
    std::size_t camber_grid = 101;     // cosine-clustered chordwise grid
    std::size_t section_count = 9;     // stations per half-span (break inserted)
    std::size_t smoothing_passes = 1;  // surface reconstruction smoothing
    double ar_ref = 2.5;
    double droop_tol = kDroopDefaultTol;
};

/// Fully realized wing: closed planform, droop-morphed section shape
/// (uniform across the span), twist schedule, spanwise stations.
struct WingGeometry {
    DesignVector design;
    WingPlanform planform;
    CamberThickness camber;      // morphed camber/thickness, chord-normalized
    AirfoilCoordinates airfoil;  // reconstructed morphed surfaces
    DroopMorph morph;
    std::vector<WingSection> sections;  // half-span stations, root to tip

    /// Normalized camber and chordwise slope at chord fraction s in [0, 1].
    double camber_at(double s) const { return camber_spline_.eval(s); }
    double camber_slope_at(double s) const { return camber_spline_.deriv(s); }

    /// Section properties at |y|, linear between stations. Stations include
    /// the break, so the piecewise-linear chord/twist laws are exact.
    WingSection section_at(double y) const;

    /// Assemble from explicit parts (sections ordered root to tip).
    static WingGeometry assemble(DesignVector design, WingPlanform planform,
                                 CamberThickness camber, std::vector<WingSection> sections);

    friend WingGeometry build_wing(const DesignVector&, const AirfoilCoordinates&,
                                   const WingBuildOptions&);

private:
    CubicSpline camber_spline_;
};

/// Build from an explicit baseline airfoil. Throws infeasible_design_error
/// when the closure gives negative chords.
WingGeometry build_wing(const DesignVector& dv, const AirfoilCoordinates& baseline,
                        const WingBuildOptions& opts = {});

/// Build with the analytic stand-in baseline section.
WingGeometry build_wing(const DesignVector& dv, const WingBuildOptions& opts = {});

/// Structured text export: planform scalars plus per-section arrays.
std::string export_geometry(const WingGeometry& wing);

}  // namespace ddw
