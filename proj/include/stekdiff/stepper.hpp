#pragma once

#include <vector>

#include "stekdiff/caputo.hpp"
#include "stekdiff/field.hpp"
#include "stekdiff/problem.hpp"

namespace stekdiff {

/// The linear system of one implicit step, kept in structured form rather
/// than as a generic matrix.  Unknowns are y_0..y_N at the new level.
///
///  * interior rows i = 1..N-1 (stored at index i; index 0 is padding):
///      sub[i]*y_{i-1} + diag[i]*y_i + sup[i]*y_{i+1} = rhs[i]
///  * proportionality row:   row0_y0 * y_0 + row0_yN * y_N = 0
///  * flux row (second-order one-sided balances at both ends combined):
///      flux_y0*y_0 + flux_y1*y_1 + flux_yNm1*y_{N-1} + flux_yN*y_N = flux_rhs
///
/// Interior rows are strictly diagonally dominant by construction; the flux
/// row is what can degenerate.
struct StepSystem {
    int n_space = 0; ///< N
    std::vector<double> sub, diag, sup, rhs;
    double row0_y0 = 1.0;
    double row0_yN = 0.0; ///< equals -alpha
    double flux_y0 = 0.0, flux_y1 = 0.0, flux_yNm1 = 0.0, flux_yN = 0.0;
    double flux_rhs = 0.0;
};

/// Assembles the step t_n -> t_{n+1}, n = weights.level, from a history
/// holding layers 0..n.  The diffusion coefficient is frozen at
/// a_i = k(x_i - h/2, t_{n+sigma}) and the source at f(x_i, t_{n+sigma}).
/// Throws std::invalid_argument on level/layer-count or grid mismatches and
/// std::runtime_error if k fails to be positive where sampled.
StepSystem assemble_step(const ProblemSpec& p, const GridSpec& grid,
                         const SolutionHistory& history,
                         const WeightTable& weights);

/// Solves the bordered tridiagonal system by the two-sweep parametric
/// method: interior unknowns are written as p_i + q_i * y_N, then the flux
/// row closes a scalar equation for y_N.  Throws DegenerateSystem when that
/// scalar equation has a vanishing denominator.
GridFunction solve_step(const StepSystem& system, double alpha);

/// Runs the full march: layer 0 from u0, then n_time implicit steps.
/// Returns all layers.  DegenerateSystem is rethrown with the failing time
/// level attached.
SolutionHistory advance(const ProblemSpec& p, const GridSpec& grid);

} // namespace stekdiff
