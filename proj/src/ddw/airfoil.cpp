#include "ddw/airfoil.hpp"

#include "ddw/cubic_spline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ddw {

namespace {

void check_surface(const std::vector<double>& x, const std::vector<double>& z,
                   const char* which) {
    if (x.size() != z.size() || x.size() < 4)
        throw std::invalid_argument(std::string("airfoil ") + which +
                                    " surface: need at least 4 points");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw std::invalid_argument(std::string("airfoil ") + which +
                                        " surface: x/c must be strictly ascending");
    const double tol = 1e-9;
    if (std::abs(x.front()) > tol || std::abs(x.back() - 1.0) > tol)
        throw std::invalid_argument(std::string("airfoil ") + which +
                                    " surface: x/c must span [0, 1]");
}

}  // namespace

void AirfoilCoordinates::validate() const {
    check_surface(upper_x, upper_z, "upper");
    check_surface(lower_x, lower_z, "lower");
    // non-self-intersection, checked on the union of abscissae
    CubicSpline up(upper_x, upper_z), lo(lower_x, lower_z);
    for (double x : upper_x)
        if (up.eval(x) < lo.eval(x) - 1e-9)
            throw std::invalid_argument("airfoil surfaces intersect");
    for (double x : lower_x)
        if (up.eval(x) < lo.eval(x) - 1e-9)
            throw std::invalid_argument("airfoil surfaces intersect");
}

void CamberThickness::validate() const {
    if (grid.size() != camber.size() || grid.size() != thickness.size() || grid.size() < 4)
        throw std::invalid_argument("CamberThickness: mismatched or short arrays");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("CamberThickness: grid must be strictly ascending");
    for (double t : thickness)
        if (t < 0.0) throw std::invalid_argument("CamberThickness: negative thickness");
}

std::vector<double> cosine_grid(std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = 0.5 * (1.0 - std::cos(M_PI * static_cast<double>(i) / (n - 1)));
    g.front() = 0.0;
    g.back() = 1.0;
    return g;
}

CamberThickness decompose_airfoil(const AirfoilCoordinates& coords, std::size_t grid_size) {
    if (grid_size < 20) throw std::invalid_argument("decompose_airfoil: grid_size < 20");
    coords.validate();

    CubicSpline up(coords.upper_x, coords.upper_z);
    CubicSpline lo(coords.lower_x, coords.lower_z);

    CamberThickness ct;
    ct.grid = cosine_grid(grid_size);
    ct.camber.resize(grid_size);
    ct.thickness.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double u = up.eval(ct.grid[i]);
        const double l = lo.eval(ct.grid[i]);
        ct.camber[i] = 0.5 * (u + l);
        ct.thickness[i] = u - l;
    }
    // clip interpolation noise on closed noses/tails
    for (auto& t : ct.thickness)
        if (t < 0.0 && t > -1e-12) t = 0.0;
    return ct;
}

namespace {

void smooth_pinned(std::vector<double>& z) {
    if (z.size() < 3) return;
    std::vector<double> out(z);
    for (std::size_t i = 1; i + 1 < z.size(); ++i)
        out[i] = (z[i - 1] + z[i] + z[i + 1]) / 3.0;
    z = std::move(out);
}

}  // namespace

AirfoilCoordinates reconstruct_airfoil(const CamberThickness& ct, std::size_t smoothing_passes) {
    ct.validate();
    const auto n = ct.grid.size();
    AirfoilCoordinates c;
    c.upper_x = ct.grid;
    c.lower_x = ct.grid;
    c.upper_z.resize(n);
    c.lower_z.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.upper_z[i] = ct.camber[i] + ct.thickness[i] / 2.0;
        c.lower_z[i] = ct.camber[i] - ct.thickness[i] / 2.0;
    }
    for (std::size_t p = 0; p < smoothing_passes; ++p) {
        smooth_pinned(c.upper_z);
        smooth_pinned(c.lower_z);
    }
    return c;
}

std::vector<std::pair<double, double>> load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open surface file: " + path);
    std::vector<std::pair<double, double>> pts;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        double x, z;
        if (ss >> x >> z) pts.emplace_back(x, z);
    }
    if (pts.size() < 4) throw std::runtime_error("surface file too short: " + path);
    return pts;
}

AirfoilCoordinates airfoil_from_surfaces(std::vector<std::pair<double, double>> upper,
                                         std::vector<std::pair<double, double>> lower) {
    auto fill = [](std::vector<std::pair<double, double>>& pts, std::vector<double>& x,
                   std::vector<double>& z) {
        std::sort(pts.begin(), pts.end());
        for (auto& [px, pz] : pts) {
            x.push_back(px);
            z.push_back(pz);
        }
    };
    AirfoilCoordinates c;
    fill(upper, c.upper_x, c.upper_z);
    fill(lower, c.lower_x, c.lower_z);
    c.validate();
    return c;
}

AirfoilCoordinates load_selig_file(const std::string& path) {
    auto pts = load_surface_file(path);  // same parser, header lines skipped
    // split at the leading edge (minimum x)
    std::size_t le = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].first < pts[le].first) le = i;
    std::vector<std::pair<double, double>> upper(pts.begin(), pts.begin() + le + 1);
    std::vector<std::pair<double, double>> lower(pts.begin() + le, pts.end());
    return airfoil_from_surfaces(std::move(upper), std::move(lower));
}

AirfoilCoordinates standin_airfoil(std::size_t points_per_surface) {
    const auto g = cosine_grid(points_per_surface);
    AirfoilCoordinates c;
    c.upper_x = g;
    c.lower_x = g;
    c.upper_z.resize(g.size());
    c.lower_z.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g[i];
        const double camber = 4.0 * kStandinCamber * x * (1.0 - x);
        const double thick = 4.0 * kStandinThickness * x * (1.0 - x);
        c.upper_z[i] = camber + thick / 2.0;
        c.lower_z[i] = camber - thick / 2.0;
    }
    return c;
}

}  // namespace ddw
