#include "ddw/wing.hpp"

#include "ddw/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace ddw {

WingGeometry build_wing(const DesignVector& dv, const AirfoilCoordinates& baseline,
                        const WingBuildOptions& opts) {
    const auto feas = check_feasibility(dv, opts.ar_ref);
    if (!feas.feasible)
        throw infeasible_design_error("build_wing: negative chord in planform closure");

    WingGeometry wing;
    wing.design = dv;
    wing.planform = solve_planform(dv, opts.ar_ref);

    const CamberThickness base_ct = decompose_airfoil(baseline, opts.camber_grid);
    DroopResult droop = apply_droop(base_ct, dv.droop_deg, opts.droop_tol);
    wing.camber = std::move(droop.morphed);
    wing.morph = std::move(droop.morph);
    wing.airfoil = reconstruct_airfoil(wing.camber, opts.smoothing_passes);
    wing.camber_spline_ = CubicSpline(wing.camber.grid, wing.camber.camber);

    // half-span stations, uniformly spaced with the break station inserted
    const double half = wing.planform.span / 2.0;
    std::vector<double> ys;
    const std::size_t n = std::max<std::size_t>(opts.section_count, 3);
    for (std::size_t i = 0; i < n; ++i)
        ys.push_back(half * static_cast<double>(i) / (n - 1));
    ys.push_back(wing.planform.break_y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-9; }),
             ys.end());

    for (double y : ys) {
        WingSection s;
        s.y = y;
        s.chord = wing.planform.chord_at(y);
        s.twist_deg = twist_at(y, wing.planform);
        s.x_le = wing.planform.x_le_at(y);
        wing.sections.push_back(s);
    }
    return wing;
}

WingGeometry build_wing(const DesignVector& dv, const WingBuildOptions& opts) {
    return build_wing(dv, standin_airfoil(), opts);
}

std::string export_geometry(const WingGeometry& wing) {
    nlohmann::json j;
    j["design_vector"] = wing.design.as_array();
    j["planform"] = {{"root_chord", wing.planform.root_chord},
                     {"break_chord", wing.planform.break_chord},
                     {"tip_chord", wing.planform.tip_chord},
                     {"span", wing.planform.span},
                     {"break_y", wing.planform.break_y},
                     {"area", wing.planform.area},
                     {"aspect_ratio", wing.planform.aspect_ratio},
                     {"mac", wing.planform.mac},
                     {"sweep_in_deg", wing.planform.sweep_in_deg},
                     {"sweep_out_deg", wing.planform.sweep_out_deg},
                     {"sweep_te_deg", wing.planform.sweep_te_deg}};
    j["droop"] = {{"droop_deg", wing.morph.droop_deg},
                  {"pivot_xc", wing.morph.pivot_xc},
                  {"continuity_residual", wing.morph.continuity_residual}};
    auto& sec = j["sections"] = nlohmann::json::array();
    for (const auto& s : wing.sections)
        sec.push_back({{"y", s.y}, {"chord", s.chord}, {"twist_deg", s.twist_deg},
                       {"x_le", s.x_le}});
    j["camber_grid"] = wing.camber.grid;
    j["camber"] = wing.camber.camber;
    j["thickness"] = wing.camber.thickness;
    return j.dump(2);
}

}  // namespace ddw
