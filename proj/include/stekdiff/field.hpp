#pragma once

#include <vector>

#include "stekdiff/problem.hpp"

namespace stekdiff {

/// Nodal values y_i, i = 0..N, on the mesh of a GridSpec.
using GridFunction = std::vector<double>;

/// All computed layers y^0 .. y^n on one grid.  The fractional derivative is
/// a convolution over the full history, so layers are never discarded.
struct SolutionHistory {
    GridSpec grid;
    std::vector<GridFunction> layers;

    int levels() const { return static_cast<int>(layers.size()); }
};

/// Discrete L2 norm  |[y]|_0 = sqrt( sum_{i=0}^{N} y_i^2 h ).
double l2_norm(const GridFunction& y, const GridSpec& grid);

/// Discrete maximum norm  max_i |y_i|.
double c_norm(const GridFunction& y);

/// Pointwise error field  z_i = y_i - exact(x_i, t).
GridFunction error_field(const GridFunction& y, const SpaceTimeFn& exact,
                         const GridSpec& grid, double t);

} // namespace stekdiff
