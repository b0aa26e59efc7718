#include "ddw/vlm.hpp"

#include "ddw/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace ddw {

void FlowCondition::validate() const {
    if (!(mach >= 0.0 && mach < 0.7))
        throw std::invalid_argument("FlowCondition: Mach outside [0, 0.7)");
    if (!(std::abs(aoa_deg) <= 25.0))
        throw std::invalid_argument("FlowCondition: |aoa| exceeds 25 degrees");
}

Vec3 FlowCondition::freestream() const {
    const double a = aoa_deg * M_PI / 180.0;
    return {std::cos(a), 0.0, std::sin(a)};
}

namespace {

constexpr double kInv4Pi = 1.0 / (4.0 * M_PI);

Vec3 segment_velocity(const Vec3& p, const Vec3& a, const Vec3& b) {
    const Vec3 r1 = p - a;
    const Vec3 r2 = p - b;
    const Vec3 c = r1.cross(r2);
    const double c2 = c.squaredNorm();
    const double n1 = r1.norm();
    const double n2 = r2.norm();
    const double cutoff = 1e-12 * (n1 * n1) * (n2 * n2);
    if (c2 <= cutoff || n1 < 1e-12 || n2 < 1e-12) return Vec3::Zero();
    const Vec3 ab = b - a;
    const double k = r1.dot(ab) / n1 - r2.dot(ab) / n2;
    return c * (k / c2 * kInv4Pi);
}

Vec3 semiinf_velocity(const Vec3& p, const Vec3& a, const Vec3& dir) {
    const Vec3 r = p - a;
    const Vec3 c = dir.cross(r);
    const double c2 = c.squaredNorm();
    const double nr = r.norm();
    if (c2 <= 1e-12 * nr * nr || nr < 1e-12) return Vec3::Zero();
    const double cos_a = dir.dot(r) / nr;
    return c * ((1.0 + cos_a) / c2 * kInv4Pi);
}

// Lattice geometry in Prandtl-Glauert space: x stretched by 1/beta.
struct ScaledGeometry {
    std::vector<Vec3> a, b, cp;
    Vec3 leg;
};

ScaledGeometry scale_pg(const Lattice& lat, double mach) {
    const double beta = std::sqrt(1.0 - mach * mach);
    ScaledGeometry g;
    g.a = lat.bound_a;
    g.b = lat.bound_b;
    g.cp = lat.control;
    for (auto* v : {&g.a, &g.b, &g.cp})
        for (auto& p : *v) p.x() /= beta;
    g.leg = Vec3(lat.leg_dir.x() / beta, lat.leg_dir.y(), lat.leg_dir.z()).normalized();
    return g;
}

}  // namespace

Vec3 horseshoe_velocity(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& leg_dir) {
    return segment_velocity(p, a, b) - semiinf_velocity(p, a, leg_dir) +
           semiinf_velocity(p, b, leg_dir);
}

VlmSolution solve_vlm(const Lattice& lat, const FlowCondition& flow) {
    flow.validate();
    const int nc = lat.nc;
    const int ns = lat.ns;
    const int half = ns / 2;
    const int n_half = nc * half;

    const ScaledGeometry g = scale_pg(lat, flow.mach);

    // unknowns: right-half horseshoe strengths; the mirror image panel
    // carries the same strength (symmetric flight, zero sideslip)
    auto mirror = [&](const Vec3& v) { return Vec3(v.x(), -v.y(), v.z()); };

    Eigen::MatrixXd A(n_half, n_half);
    Eigen::VectorXd rhs(n_half);
    const Vec3 vinf = flow.freestream();

    for (int jr = 0; jr < half; ++jr) {
        for (int ir = 0; ir < nc; ++ir) {
            const int row = jr * nc + ir;
            const int pr = lat.index(ir, half + jr);
            const Vec3& cp = g.cp[pr];
            const Vec3& nrm = lat.normal[pr];
            for (int jc = 0; jc < half; ++jc) {
                for (int ic = 0; ic < nc; ++ic) {
                    const int col = jc * nc + ic;
                    const int pc = lat.index(ic, half + jc);
                    Vec3 v = horseshoe_velocity(cp, g.a[pc], g.b[pc], g.leg);
                    v += horseshoe_velocity(cp, mirror(g.a[pc]), mirror(g.b[pc]), g.leg);
                    A(row, col) = v.dot(nrm);
                }
            }
            rhs(row) = -vinf.dot(nrm);
        }
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-13))
        throw solver_error("solve_vlm: singular influence matrix, rcond = " +
                           std::to_string(rcond));
    Eigen::VectorXd strength = lu.solve(rhs);

    // one step of iterative refinement keeps the residual contract tight
    Eigen::VectorXd r = rhs - A * strength;
    strength += lu.solve(r);
    r = rhs - A * strength;
    const double rhs_inf = rhs.lpNorm<Eigen::Infinity>();
    const double res_inf = r.lpNorm<Eigen::Infinity>();

    VlmSolution sol;
    sol.residual_inf = rhs_inf > 0.0 ? res_inf / rhs_inf : res_inf;
    if (rhs_inf > 0.0 && !(res_inf < 1e-10 * rhs_inf))
        throw solver_error("solve_vlm: residual above contract, rcond = " +
                           std::to_string(rcond));

    sol.s_ref = lat.s_ref;
    sol.mac = lat.mac;
    sol.moment_origin = lat.moment_origin;

    // mirror onto the full lattice, then accumulate chordwise so gamma is
    // the potential-jump circulation per panel
    std::vector<double> hs(lat.size(), 0.0);
    for (int jr = 0; jr < half; ++jr)
        for (int ir = 0; ir < nc; ++ir) {
            const double s = strength(jr * nc + ir);
            hs[lat.index(ir, half + jr)] = s;
            hs[lat.index(ir, half - 1 - jr)] = s;
        }
    sol.gamma.assign(lat.size(), 0.0);
    for (int j = 0; j < ns; ++j) {
        double acc = 0.0;
        for (int i = 0; i < nc; ++i) {
            acc += hs[lat.index(i, j)];
            sol.gamma[lat.index(i, j)] = acc;
        }
    }
    return sol;
}

std::vector<double> panel_loads(const VlmSolution& solution, const Lattice& lat,
                                const FlowCondition& flow) {
    flow.validate();
    if (solution.gamma.size() != lat.size())
        throw std::invalid_argument("panel_loads: solution does not match lattice");
    std::vector<double> dcp(lat.size(), 0.0);
    for (int j = 0; j < lat.ns; ++j) {
        for (int i = 0; i < lat.nc; ++i) {
            const int p = lat.index(i, j);
            const double prev = i > 0 ? solution.gamma[lat.index(i - 1, j)] : 0.0;
            const double dc = lat.chord[p];
            dcp[p] = dc > 1e-12 ? 2.0 * (solution.gamma[p] - prev) / dc : 0.0;
        }
    }
    return dcp;
}

AeroCoefficients integrate_coeffs(const std::vector<double>& dcp, const VlmSolution& solution,
                                  const Lattice& lat, const FlowCondition& flow) {
    flow.validate();
    if (lat.s_ref <= 0.0) throw std::invalid_argument("integrate_coeffs: zero reference area");
    if (dcp.size() != lat.size() || solution.gamma.size() != lat.size())
        throw std::invalid_argument("integrate_coeffs: field does not match lattice");

    const Vec3 vinf = flow.freestream();
    const double aoa = flow.aoa_deg * M_PI / 180.0;
    const Vec3 lift_dir(-std::sin(aoa), 0.0, std::cos(aoa));

    AeroCoefficients out;
    Vec3 moment = Vec3::Zero();
    for (std::size_t p = 0; p < lat.size(); ++p) {
        const Vec3 f = dcp[p] * lat.area[p] * lat.normal[p];
        out.cl += f.dot(lift_dir);
        const Vec3 r = 0.5 * (lat.bound_a[p] + lat.bound_b[p]) - lat.moment_origin;
        moment += r.cross(f);
    }
    out.cl /= lat.s_ref;
    out.cm = moment.y() / (lat.s_ref * lat.mac);

    // near-field induced drag: Kutta-Joukowski force on each bound segment
    // from the velocity induced by every element except the segment itself,
    // evaluated in the same Prandtl-Glauert space as the solve
    const ScaledGeometry g = scale_pg(lat, flow.mach);
    auto mirror = [](const Vec3& v) { return Vec3(v.x(), -v.y(), v.z()); };

    // recover horseshoe strengths from the accumulated gamma
    std::vector<double> hs(lat.size());
    for (int j = 0; j < lat.ns; ++j)
        for (int i = 0; i < lat.nc; ++i) {
            const int p = lat.index(i, j);
            const double prev = i > 0 ? solution.gamma[lat.index(i - 1, j)] : 0.0;
            hs[p] = solution.gamma[p] - prev;
        }

    double drag = 0.0;
    for (std::size_t p = 0; p < lat.size(); ++p) {
        if (hs[p] == 0.0) continue;
        const Vec3 mid = 0.5 * (g.a[p] + g.b[p]);
        Vec3 v = vinf;
        for (std::size_t q = 0; q < lat.size(); ++q) {
            if (hs[q] == 0.0) continue;
            if (q != p) v += hs[q] * segment_velocity(mid, g.a[q], g.b[q]);
            v += hs[q] * (semiinf_velocity(mid, g.b[q], g.leg) -
                          semiinf_velocity(mid, g.a[q], g.leg));
        }
        const Vec3 dl = g.b[p] - g.a[p];
        const Vec3 f = 2.0 * hs[p] * v.cross(dl);  // rho = 2 so q_inf = 1
        drag += f.dot(vinf);
    }
    out.cdi = drag / lat.s_ref;
    return out;
}

VlmSolution run_vlm(const Lattice& lattice, const FlowCondition& flow) {
    VlmSolution sol = solve_vlm(lattice, flow);
    sol.dcp = panel_loads(sol, lattice, flow);
    sol.coeffs = integrate_coeffs(sol.dcp, sol, lattice, flow);
    return sol;
}

}  // namespace ddw
