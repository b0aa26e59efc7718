#pragma once

#include "ddw/wing.hpp"

#include <Eigen/Core>

#include <vector>

namespace ddw {

using Vec3 = Eigen::Vector3d;

enum class SpacingLaw { uniform, cosine };

struct LatticeConfig {
    int chordwise_panels = 30;  // NC
    int spanwise_panels = 32;   // NS over the full span; even, mirrored
    SpacingLaw chordwise = SpacingLaw::cosine;
    SpacingLaw spanwise = SpacingLaw::uniform;
    /// Trailing legs leave the bound vortices along the freestream of this
    /// incidence (wake direction is lattice state, not flow state).
    double wake_alignment_deg = 0.0;
};

/// Horseshoe lattice over the full span. Panel i runs chordwise (0 at the
/// leading edge), panel j spanwise from the left tip; index = j*NC + i.
struct Lattice {
    int nc = 0, ns = 0;
    std::vector<Vec3> bound_a, bound_b;  // bound-vortex segment per panel
    std::vector<Vec3> control;           // three-quarter-chord panel center
    std::vector<Vec3> normal;            // camber- and twist-aware
    std::vector<double> area;            // 3-D quad area
    std::vector<double> chord;           // local panel chord
    std::vector<double> width;           // spanwise width
    Vec3 leg_dir = Vec3(1, 0, 0);        // unit trailing-leg direction

    double s_ref = 0.0;   // B^2 / ar_ref
    double mac = 0.0;
    Vec3 moment_origin = Vec3::Zero();  // wing apex by default

    int index(int i, int j) const { return j * nc + i; }
    int mirror_panel(int j) const { return ns - 1 - j; }
    std::size_t size() const { return bound_a.size(); }
};

/// Discretize the wing into NC x NS panels with bound vortices at panel
/// quarter-chords and control points at three-quarter-chord centers.
/// Zero tip chords collapse the tip column to triangles.
Lattice build_lattice(const WingGeometry& wing, const LatticeConfig& config = {});

}  // namespace ddw
