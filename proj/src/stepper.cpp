#include "stekdiff/stepper.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "stekdiff/errors.hpp"
#include "stekdiff/thomas.hpp"

namespace stekdiff {

StepSystem assemble_step(const ProblemSpec& p, const GridSpec& grid,
                         const SolutionHistory& history,
                         const WeightTable& weights) {
    const int N = grid.n_space;
    const int n = weights.level;
    if (N < 2)
        throw std::invalid_argument("need at least 2 space subintervals");
    if (history.levels() != n + 1)
        throw std::invalid_argument(
            "history must hold layers 0..n to assemble step n");
    if (n >= grid.n_time)
        throw std::invalid_argument("step level lies beyond the grid horizon");
    if (history.grid.n_space != N || history.grid.n_time != grid.n_time ||
        history.grid.tau != grid.tau)
        throw std::invalid_argument("history was computed on a different grid");
    for (const GridFunction& layer : history.layers)
        if (static_cast<int>(layer.size()) != N + 1)
            throw std::invalid_argument("layer length does not match the grid");

    const double h = grid.h;
    const double sigma = grid.sigma;
    const double ts = grid.t_sigma(n);
    const double inv_tg = weights.scale / grid.tau; // 1/(tau^nu Gamma(2-nu))
    const double kappa = weights.c[0] * inv_tg;

    // Diffusion coefficient frozen at the half nodes and the source at the
    // evaluation time t_{n+sigma}.  A[i] = k(x_i - h/2, ts) / h^2 weights the
    // face between nodes i-1 and i.
    std::vector<double> A(N + 1, 0.0);
    for (int i = 1; i <= N; ++i) {
        const double kv = p.k(grid.x(i) - 0.5 * h, ts);
        if (!std::isfinite(kv) || kv <= 0.0)
            throw std::runtime_error(
                "k must be strictly positive; failed at x=" +
                std::to_string(grid.x(i) - 0.5 * h) + ", t=" + std::to_string(ts));
        A[i] = kv / (h * h);
    }
    std::vector<double> phi(N + 1);
    for (int i = 0; i <= N; ++i) phi[i] = p.f(grid.x(i), ts);

    // Split the discrete Caputo derivative as kappa*y^{n+1} + tail, where the
    // tail collects the known history.
    const GridFunction& yn = history.layers[n];
    std::vector<double> tail(N + 1, 0.0);
    for (int s = 0; s < n; ++s) {
        const double cs = weights.c[n - s];
        const GridFunction& ya = history.layers[s];
        const GridFunction& yb = history.layers[s + 1];
        for (int i = 0; i <= N; ++i) tail[i] += cs * (yb[i] - ya[i]);
    }
    for (int i = 0; i <= N; ++i)
        tail[i] = (tail[i] - weights.c[0] * yn[i]) * inv_tg;

    StepSystem sys;
    sys.n_space = N;
    sys.sub.assign(N, 0.0);
    sys.diag.assign(N, 0.0);
    sys.sup.assign(N, 0.0);
    sys.rhs.assign(N, 0.0);

    for (int i = 1; i < N; ++i) {
        sys.sub[i] = -sigma * A[i];
        sys.diag[i] = kappa + sigma * (A[i] + A[i + 1]);
        sys.sup[i] = -sigma * A[i + 1];
        const double lap_old = A[i] * yn[i - 1] - (A[i] + A[i + 1]) * yn[i] +
                               A[i + 1] * yn[i + 1];
        sys.rhs[i] = phi[i] - tail[i] + (1.0 - sigma) * lap_old;
        if (!(std::abs(sys.diag[i]) >
              std::abs(sys.sub[i]) + std::abs(sys.sup[i])))
            throw std::runtime_error("interior row lost diagonal dominance");
    }

    sys.row0_y0 = 1.0;
    sys.row0_yN = -p.alpha;

    // Flux row: the one-sided second-order flux balances at x=0 and x=1,
    // combined through the boundary condition and scaled by 2/h.
    sys.flux_y0 = p.beta * kappa + 2.0 * sigma * p.beta * A[1];
    sys.flux_y1 = -2.0 * sigma * p.beta * A[1];
    sys.flux_yNm1 = -2.0 * sigma * A[N];
    sys.flux_yN = kappa + 2.0 * sigma * A[N] - 2.0 * sigma * p.gamma / h;
    sys.flux_rhs = (2.0 / h) * p.mu(ts) + phi[N] + p.beta * phi[0] -
                   p.beta * tail[0] - tail[N] -
                   2.0 * (1.0 - sigma) *
                       (A[N] * (yn[N] - yn[N - 1]) -
                        p.beta * A[1] * (yn[1] - yn[0])) +
                   2.0 * (1.0 - sigma) * p.gamma / h * yn[N];
    return sys;
}

GridFunction solve_step(const StepSystem& system, double alpha) {
    const int N = system.n_space;
    if (N < 2) throw std::invalid_argument("system needs n_space >= 2");
    if (static_cast<int>(system.diag.size()) != N ||
        static_cast<int>(system.sub.size()) != N ||
        static_cast<int>(system.sup.size()) != N ||
        static_cast<int>(system.rhs.size()) != N)
        throw std::invalid_argument("system bands have wrong length");

    const int m = N - 1; // interior unknowns y_1..y_{N-1}
    const std::span<const double> sub(system.sub), diag(system.diag),
        sup(system.sup), rhs(system.rhs);

    // Parametric sweep: y_i = p_i + q_i * y_N for i = 1..N-1, where p solves
    // the interior system with the given loads and q with the couplings that
    // row 1 has to y_0 = alpha*y_N and row N-1 has to y_N.
    const GridFunction p = solve_tridiagonal(
        sub.subspan(1, m), diag.subspan(1, m), sup.subspan(1, m),
        rhs.subspan(1, m));
    std::vector<double> d(m, 0.0);
    d[0] += -system.sub[1] * alpha;
    d[m - 1] += -system.sup[N - 1];
    const GridFunction q = solve_tridiagonal(
        sub.subspan(1, m), diag.subspan(1, m), sup.subspan(1, m), d);

    // The flux row closes a scalar equation for y_N.
    const double t0 = system.flux_y0 * alpha;
    const double t1 = system.flux_y1 * q[0];
    const double t2 = system.flux_yNm1 * q[m - 1];
    const double t3 = system.flux_yN;
    const double denom = t0 + t1 + t2 + t3;
    const double mag =
        std::abs(t0) + std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (std::abs(denom) <= 1e-14 * mag)
        throw DegenerateSystem("flux closure denominator vanishes");

    const double yN = (system.flux_rhs - system.flux_y1 * p[0] -
                       system.flux_yNm1 * p[m - 1]) /
                      denom;
    GridFunction y(N + 1);
    y[0] = alpha * yN;
    y[N] = yN;
    for (int i = 1; i < N; ++i) y[i] = p[i - 1] + q[i - 1] * yN;
    return y;
}

SolutionHistory advance(const ProblemSpec& p, const GridSpec& grid) {
    validate_problem(p); // hard errors throw; warnings are the caller's business
    if (grid.n_space < 2 || grid.n_time < 1)
        throw std::invalid_argument("grid too small");

    SolutionHistory hist;
    hist.grid = grid;
    hist.layers.reserve(grid.n_time + 1);
    GridFunction y0(grid.n_space + 1);
    for (int i = 0; i <= grid.n_space; ++i) y0[i] = p.u0(grid.x(i));
    hist.layers.push_back(std::move(y0));

    WeightCache cache(p.nu, grid.sigma);
    for (int n = 0; n < grid.n_time; ++n) {
        const WeightTable w = cache.table(n, grid.tau);
        const StepSystem sys = assemble_step(p, grid, hist, w);
        try {
            hist.layers.push_back(solve_step(sys, p.alpha));
        } catch (const DegenerateSystem& e) {
            throw DegenerateSystem(std::string(e.what()) + " (time level " +
                                       std::to_string(n + 1) + ")",
                                   n + 1);
        }
    }
    return hist;
}

} // namespace stekdiff
