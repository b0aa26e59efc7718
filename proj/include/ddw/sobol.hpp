#pragma once

#include <cstddef>
#include <vector>

namespace ddw {

/// Maximum dimension covered by the bundled direction-number table.
std::size_t sobol_max_dims();

/// First `count` points of the base-2 Sobol sequence in canonical index
/// order (point 0 is the origin), using the bundled Joe-Kuo direction
/// numbers. Coordinates lie in [0, 1). Throws std::invalid_argument for
/// dims beyond the table.
std::vector<std::vector<double>> sobol_points(std::size_t count, std::size_t dims);

}  // namespace ddw
