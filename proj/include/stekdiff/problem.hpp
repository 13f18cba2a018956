#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stekdiff {

using SpaceTimeFn = std::function<double(double /*x*/, double /*t*/)>;
using TimeFn = std::function<double(double /*t*/)>;
using SpaceFn = std::function<double(double /*x*/)>;

/// Continuous problem data on the strip [0,1] x [0,T]:
///
///     D^nu_t u = (k(x,t) u_x)_x + f(x,t),               0 < nu < 1,
///     u(0,t)   = alpha * u(1,t),
///     k(1,t) u_x(1,t) = beta k(0,t) u_x(0,t) + gamma u(1,t) + mu(t),
///     u(x,0)   = u0(x),
///
/// where D^nu_t is the Caputo derivative of order nu.  The boundary rows are
/// the nonlocal (Steklov-type) conditions of the second kind; the scheme
/// additionally relies on the mirror symmetry k(x,t) == k(1-x,t), which is
/// asserted by the k_symmetric flag.
struct ProblemSpec {
    double nu = 0.5;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    SpaceTimeFn k;
    SpaceTimeFn f;
    TimeFn mu;
    SpaceFn u0;
    double horizon = 1.0;    ///< final time T
    bool k_symmetric = true; ///< claim that k(x,t) == k(1-x,t)
};

/// Checks hard invariants -- nu in (0,1), horizon > 0, callables present,
/// k strictly positive on a probe grid (nodes and midpoints in x, several
/// times in [0,T]) -- and throws std::invalid_argument on violation.
///
/// Soft findings are returned as warnings instead of failing: a k_symmetric
/// flag whose probe |k(x,t) - k(1-x,t)| exceeds 1e-12 downgrades to a warning
/// that is carried into study reports.
std::vector<std::string> validate_problem(const ProblemSpec& p);

/// Uniform mesh: x_i = i*h (i = 0..N, h = 1/N) by t_n = n*tau
/// (n = 0..N_T, tau = T/N_T).  sigma = 1 - nu/2 locates the evaluation
/// point t_{n+sigma} of the fractional time discretization.
struct GridSpec {
    int n_space = 2; ///< N: number of space subintervals
    int n_time = 1;  ///< N_T: number of time steps
    double h = 0.5;
    double tau = 1.0;
    double sigma = 0.75;

    double x(int i) const { return i * h; }
    double t(int n) const { return n * tau; }
    /// evaluation time of the step t_n -> t_{n+1}
    double t_sigma(int n) const { return (n + sigma) * tau; }
};

/// Builds the mesh for a validated problem.  Requires n_space >= 2 and
/// n_time >= 1 (the flux row couples y_0, y_1, y_{N-1}, y_N, so a single
/// space cell has no interior row to close the system with).
GridSpec build_grid(const ProblemSpec& p, int n_space, int n_time);

} // namespace stekdiff
