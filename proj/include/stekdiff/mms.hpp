#pragma once

#include "stekdiff/field.hpp"
#include "stekdiff/problem.hpp"

namespace stekdiff {

/// A manufactured problem with known closed-form solution
///
///   u(x,t) = X(x) * T(t),
///   X(x)   = (alpha+1) + sin(pi x) + (alpha-1) cos(pi x),
///   T(t)   = t^2 + t + 1,
///   k(x)   = 2 - sin(pi x),
///
/// where X satisfies X(0) = alpha * X(1) exactly for every alpha, k is
/// mirror-symmetric and strictly positive, and the source f and boundary
/// drive mu are derived so that u solves the problem exactly:
///
///   D^nu T = 2 t^{2-nu}/Gamma(3-nu) + t^{1-nu}/Gamma(2-nu),
///   f      = X * D^nu T - T * (k' X' + k X''),
///   mu(t)  = -2 (pi (1 + beta) + gamma) * T(t).
struct ManufacturedProblem {
    ProblemSpec problem;
    SpaceTimeFn exact; ///< u(x,t)
};

/// Builds the manufactured problem.  Throws std::invalid_argument unless
/// nu in (0,1) and horizon > 0.
ManufacturedProblem make_problem(double nu, double alpha, double beta,
                                 double gamma, double horizon = 1.0);

/// Samples the exact solution on layer `level` of `grid`.  Throws
/// std::out_of_range unless 0 <= level <= grid.n_time.
GridFunction exact_layer(const ManufacturedProblem& mp, const GridSpec& grid,
                         int level);

} // namespace stekdiff
