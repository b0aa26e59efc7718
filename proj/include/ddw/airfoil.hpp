#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ddw {

/// Chord-normalized surface coordinates. x/c strictly ascending per
/// surface, spanning [0, 1], upper(x) >= lower(x).
struct AirfoilCoordinates {
    std::vector<double> upper_x, upper_z;
    std::vector<double> lower_x, lower_z;

    void validate() const;  // throws std::invalid_argument on violations
};

/// Camber and (full) thickness distributions on a shared chordwise grid.
struct CamberThickness {
    std::vector<double> grid;       // ascending x/c
    std::vector<double> camber;     // z/c
    std::vector<double> thickness;  // z/c, >= 0

    void validate() const;
};

/// Cosine-clustered chordwise grid on [0, 1], resolving the leading edge.
std::vector<double> cosine_grid(std::size_t n);

/// Cubic-spline fit of both surfaces, evaluated on a shared cosine grid of
/// size grid_size. Camber = (upper+lower)/2, thickness = upper-lower.
CamberThickness decompose_airfoil(const AirfoilCoordinates& coords, std::size_t grid_size);

/// Inverse of decompose: upper/lower = camber +- thickness/2 on the same
/// grid, followed by smoothing_passes of a three-point moving average with
/// pinned endpoints applied to each surface.
AirfoilCoordinates reconstruct_airfoil(const CamberThickness& ct, std::size_t smoothing_passes);

/// Two-column (x/c, z/c) plain text, one surface per file.
std::vector<std::pair<double, double>> load_surface_file(const std::string& path);

/// Selig-style single file: TE -> LE over the upper surface, then
/// LE -> TE over the lower surface; split at the minimum-x point.
AirfoilCoordinates load_selig_file(const std::string& path);

AirfoilCoordinates airfoil_from_surfaces(std::vector<std::pair<double, double>> upper,
                                         std::vector<std::pair<double, double>> lower);

/// Analytic test section: parabolic camber 4*f*x*(1-x) with f = 0.02 and a
/// 6% parabolic symmetric thickness. Stands in for the baseline root
/// airfoil when no coordinate file is supplied.
AirfoilCoordinates standin_airfoil(std::size_t points_per_surface = 121);

inline constexpr double kStandinCamber = 0.02;
inline constexpr double kStandinThickness = 0.06;

}  // namespace ddw
