#include "ddw/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace ddw {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

std::vector<double> chord_fractions(int nc, SpacingLaw law) {
    std::vector<double> s(nc + 1);
    for (int i = 0; i <= nc; ++i)
        s[i] = law == SpacingLaw::cosine
                   ? 0.5 * (1.0 - std::cos(M_PI * static_cast<double>(i) / nc))
                   : static_cast<double>(i) / nc;
    s.front() = 0.0;
    s.back() = 1.0;
    return s;
}

// Spanwise stations, mirror-exact: the right half is built and reflected.
std::vector<double> span_stations(double span, int ns, SpacingLaw law) {
    std::vector<double> y(ns + 1);
    const int h = ns / 2;
    y[h] = 0.0;
    for (int k = 1; k <= h; ++k) {
        const double f = law == SpacingLaw::cosine
                             ? std::sin(0.5 * M_PI * static_cast<double>(k) / h)
                             : static_cast<double>(k) / h;
        const double yk = f * span / 2.0;
        y[h + k] = yk;
        y[h - k] = -yk;
    }
    return y;
}

}  // namespace

Lattice build_lattice(const WingGeometry& wing, const LatticeConfig& config) {
    if (config.chordwise_panels < 1)
        throw std::invalid_argument("build_lattice: NC must be >= 1");
    if (config.spanwise_panels < 2 || config.spanwise_panels % 2 != 0)
        throw std::invalid_argument("build_lattice: NS must be even and >= 2");

    const int nc = config.chordwise_panels;
    const int ns = config.spanwise_panels;
    const auto& pf = wing.planform;

    const auto sfrac = chord_fractions(nc, config.chordwise);
    const auto ys = span_stations(pf.span, ns, config.spanwise);

    // surface point at chord fraction s of a station, twist applied as a
    // rigid rotation about the local quarter-chord
    auto surface_point = [&](double s, double y) -> Vec3 {
        const double ay = std::abs(y);
        const double c = pf.chord_at(ay);
        const double xle = pf.x_le_at(ay);
        if (c <= 0.0) return {xle, y, 0.0};
        const double th = twist_at(ay, pf) * kDegToRad;
        const double zqc = c * wing.camber_at(0.25);
        const double dx = (s - 0.25) * c;
        const double dz = c * wing.camber_at(s) - zqc;
        return {xle + 0.25 * c + dx * std::cos(th) + dz * std::sin(th), y,
                zqc - dx * std::sin(th) + dz * std::cos(th)};
    };

    Lattice lat;
    lat.nc = nc;
    lat.ns = ns;
    lat.s_ref = pf.area;
    lat.mac = pf.mac;
    lat.moment_origin = Vec3::Zero();
    {
        const double wa = config.wake_alignment_deg * kDegToRad;
        lat.leg_dir = Vec3(std::cos(wa), 0.0, std::sin(wa));
    }

    const auto n_panels = static_cast<std::size_t>(nc) * ns;
    lat.bound_a.resize(n_panels);
    lat.bound_b.resize(n_panels);
    lat.control.resize(n_panels);
    lat.normal.resize(n_panels);
    lat.area.resize(n_panels);
    lat.chord.resize(n_panels);
    lat.width.resize(n_panels);

    for (int j = 0; j < ns; ++j) {
        for (int i = 0; i < nc; ++i) {
            const Vec3 c00 = surface_point(sfrac[i], ys[j]);
            const Vec3 c10 = surface_point(sfrac[i + 1], ys[j]);
            const Vec3 c01 = surface_point(sfrac[i], ys[j + 1]);
            const Vec3 c11 = surface_point(sfrac[i + 1], ys[j + 1]);

            const int p = lat.index(i, j);
            lat.bound_a[p] = c00 + 0.25 * (c10 - c00);
            lat.bound_b[p] = c01 + 0.25 * (c11 - c01);
            const Vec3 mid_le = 0.5 * (c00 + c01);
            const Vec3 mid_te = 0.5 * (c10 + c11);
            lat.control[p] = mid_le + 0.75 * (mid_te - mid_le);
            lat.chord[p] = (mid_te - mid_le).norm();
            lat.width[p] = ys[j + 1] - ys[j];

            const Vec3 cr = (c11 - c00).cross(c01 - c10);
            const double nrm = cr.norm();
            lat.area[p] = 0.5 * nrm;
            lat.normal[p] = nrm > 1e-14 ? Vec3(cr / nrm) : Vec3(0, 0, 1);
        }
    }
    return lat;
}

}  // namespace ddw
