#include "stekdiff/field.hpp"

#include <cmath>
#include <stdexcept>

namespace stekdiff {

double l2_norm(const GridFunction& y, const GridSpec& grid) {
    if (static_cast<int>(y.size()) != grid.n_space + 1)
        throw std::invalid_argument("grid function has wrong length");
    double s = 0.0;
    for (double v : y) s += v * v;
    return std::sqrt(s * grid.h);
}

double c_norm(const GridFunction& y) {
    if (y.empty()) throw std::invalid_argument("grid function is empty");
    double m = 0.0;
    for (double v : y) m = std::max(m, std::abs(v));
    return m;
}

GridFunction error_field(const GridFunction& y, const SpaceTimeFn& exact,
                         const GridSpec& grid, double t) {
    if (static_cast<int>(y.size()) != grid.n_space + 1)
        throw std::invalid_argument("grid function has wrong length");
    if (!exact) throw std::invalid_argument("exact solution callable is empty");
    GridFunction z(y.size());
    for (int i = 0; i <= grid.n_space; ++i) z[i] = y[i] - exact(grid.x(i), t);
    return z;
}

} // namespace stekdiff
