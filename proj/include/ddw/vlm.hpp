#pragma once

#include "ddw/lattice.hpp"

#include <vector>

namespace ddw {

struct FlowCondition {
    double mach = 0.3;
    double aoa_deg = 11.0;

    void validate() const;  // subcritical Mach, |aoa| <= 25
    Vec3 freestream() const;  // unit vector
};

/// Integrated force and moment coefficients.
struct AeroCoefficients {
    double cl = 0.0;
    double cdi = 0.0;
    double cm = 0.0;
};

struct VlmSolution {
    /// Chordwise-accumulated (potential-jump) circulation per panel; the
    /// bound-segment strength of panel (i, j) is gamma(i,j) - gamma(i-1,j).
    std::vector<double> gamma;
    std::vector<double> dcp;  // net panel loading
    AeroCoefficients coeffs;
    double s_ref = 0.0;
    double mac = 0.0;
    Vec3 moment_origin = Vec3::Zero();
    double residual_inf = 0.0;  // solver residual, infinity norm ratio
};

/// Biot-Savart velocity of a unit-strength horseshoe: bound segment a->b
/// plus semi-infinite trailing legs along leg_dir (into a, out of b).
Vec3 horseshoe_velocity(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& leg_dir);

/// Assemble and solve the no-penetration system by dense LU on the
/// symmetry-reduced half problem; fills circulations only.
VlmSolution solve_vlm(const Lattice& lattice, const FlowCondition& flow);

/// Net panel loading from the circulation jumps:
///   dcp(i,j) = 2 (gamma(i,j) - gamma(i-1,j)) / (V * panel chord).
std::vector<double> panel_loads(const VlmSolution& solution, const Lattice& lattice,
                                const FlowCondition& flow);

/// CL and CM from the pressure loading, CDi from the induced velocity at
/// the bound segments (near-field Kutta-Joukowski sum).
AeroCoefficients integrate_coeffs(const std::vector<double>& dcp, const VlmSolution& solution,
                                  const Lattice& lattice, const FlowCondition& flow);

/// Convenience: solve, load, integrate.
VlmSolution run_vlm(const Lattice& lattice, const FlowCondition& flow);

}  // namespace ddw
