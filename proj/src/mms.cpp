#include "stekdiff/mms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stekdiff {

ManufacturedProblem make_problem(double nu, double alpha, double beta,
                                 double gamma, double horizon) {
    if (!(nu > 0.0) || !(nu < 1.0))
        throw std::invalid_argument("nu must lie strictly inside (0,1)");
    if (!(horizon > 0.0))
        throw std::invalid_argument("horizon T must be positive");

    constexpr double pi = std::numbers::pi;
    const double g2 = std::tgamma(2.0 - nu);
    const double g3 = std::tgamma(3.0 - nu);

    auto X = [alpha](double x) {
        return (alpha + 1.0) + std::sin(pi * x) + (alpha - 1.0) * std::cos(pi * x);
    };
    auto Xp = [alpha](double x) {
        return pi * std::cos(pi * x) - (alpha - 1.0) * pi * std::sin(pi * x);
    };
    auto Xpp = [alpha](double x) {
        return -pi * pi * std::sin(pi * x) -
               (alpha - 1.0) * pi * pi * std::cos(pi * x);
    };
    auto Tt = [](double t) { return t * t + t + 1.0; };
    // Caputo derivative of T: the t^2 and t terms contribute, the constant
    // drops out.
    auto DnuT = [nu, g2, g3](double t) {
        return 2.0 * std::pow(t, 2.0 - nu) / g3 + std::pow(t, 1.0 - nu) / g2;
    };

    ManufacturedProblem mp;
    mp.problem.nu = nu;
    mp.problem.alpha = alpha;
    mp.problem.beta = beta;
    mp.problem.gamma = gamma;
    mp.problem.horizon = horizon;
    mp.problem.k_symmetric = true;
    mp.problem.k = [](double x, double) { return 2.0 - std::sin(pi * x); };
    mp.problem.f = [X, Xp, Xpp, Tt, DnuT](double x, double t) {
        const double k = 2.0 - std::sin(pi * x);
        const double kp = -pi * std::cos(pi * x);
        return X(x) * DnuT(t) - Tt(t) * (kp * Xp(x) + k * Xpp(x));
    };
    // X was chosen so that both boundary identities reduce to constants:
    // X(0) = alpha*X(1) holds identically, and the flux mismatch
    // k(1)X'(1) - beta*k(0)X'(0) - gamma*X(1) equals -2(pi(1+beta) + gamma).
    mp.problem.mu = [beta, gamma, Tt](double t) {
        return -2.0 * (pi * (1.0 + beta) + gamma) * Tt(t);
    };
    mp.problem.u0 = [X](double x) { return X(x); };
    mp.exact = [X, Tt](double x, double t) { return X(x) * Tt(t); };
    return mp;
}

GridFunction exact_layer(const ManufacturedProblem& mp, const GridSpec& grid,
                         int level) {
    if (level < 0 || level > grid.n_time)
        throw std::out_of_range("layer index outside 0..n_time");
    GridFunction y(grid.n_space + 1);
    const double t = grid.t(level);
    for (int i = 0; i <= grid.n_space; ++i) y[i] = mp.exact(grid.x(i), t);
    return y;
}

} // namespace stekdiff
