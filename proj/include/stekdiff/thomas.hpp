#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stekdiff {

/// Thomas elimination for a tridiagonal system.  Row i reads
///   sub[i]*x_{i-1} + diag[i]*x_i + sup[i]*x_{i+1} = rhs[i];
/// sub[0] and sup[m-1] are ignored.  No pivoting: callers guarantee strict
/// diagonal dominance (the assembled rows always are).
inline std::vector<double> solve_tridiagonal(std::span<const double> sub,
                                             std::span<const double> diag,
                                             std::span<const double> sup,
                                             std::span<const double> rhs) {
    const std::size_t m = diag.size();
    std::vector<double> c(m, 0.0);
    std::vector<double> x(m, 0.0);

    if (m == 0) return x;
    if (m > 1) c[0] = sup[0] / diag[0];
    x[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < m; ++i) {
        const double den = diag[i] - sub[i] * c[i - 1];
        if (i + 1 < m) c[i] = sup[i] / den;
        x[i] = (rhs[i] - sub[i] * x[i - 1]) / den;
    }
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

} // namespace stekdiff
