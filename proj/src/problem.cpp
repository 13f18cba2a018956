#include "stekdiff/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stekdiff {

namespace {

std::string describe(double x, double t) {
    std::ostringstream os;
    os << "(x=" << x << ", t=" << t << ")";
    return os.str();
}

} // namespace

std::vector<std::string> validate_problem(const ProblemSpec& p) {
    if (!(p.nu > 0.0) || !(p.nu < 1.0))
        throw std::invalid_argument("nu must lie strictly inside (0,1)");
    if (!(p.horizon > 0.0))
        throw std::invalid_argument("horizon T must be positive");
    if (!p.k || !p.f || !p.mu || !p.u0)
        throw std::invalid_argument("k, f, mu and u0 must all be set");

    // Probe k at nodes and midpoints of a fixed sample mesh and at several
    // times.  This is a smoke check, not a proof: positivity failures are
    // hard errors, symmetry failures only downgrade the k_symmetric claim.
    std::vector<std::string> warnings;
    constexpr int kx = 64;
    constexpr int kt = 8;
    double worst_asym = 0.0;
    for (int j = 0; j <= kt; ++j) {
        const double t = p.horizon * j / kt;
        for (int i = 0; i <= 2 * kx; ++i) {
            const double x = 0.5 * i / kx; // nodes and midpoints of a 1/64 mesh
            const double v = p.k(x, t);
            if (!std::isfinite(v) || v <= 0.0)
                throw std::invalid_argument(
                    "k must be strictly positive; k" + describe(x, t) + " = " +
                    std::to_string(v));
            if (p.k_symmetric)
                worst_asym = std::max(worst_asym, std::abs(v - p.k(1.0 - x, t)));
        }
    }
    if (p.k_symmetric && worst_asym > 1e-12) {
        std::ostringstream os;
        os << "k is declared symmetric but |k(x,t) - k(1-x,t)| reaches "
           << worst_asym << " on the probe grid";
        warnings.push_back(os.str());
    }
    return warnings;
}

GridSpec build_grid(const ProblemSpec& p, int n_space, int n_time) {
    if (!(p.nu > 0.0) || !(p.nu < 1.0))
        throw std::invalid_argument("nu must lie strictly inside (0,1)");
    if (!(p.horizon > 0.0))
        throw std::invalid_argument("horizon T must be positive");
    if (n_space < 2)
        throw std::invalid_argument("need at least 2 space subintervals");
    if (n_time < 1)
        throw std::invalid_argument("need at least one time step");

    GridSpec g;
    g.n_space = n_space;
    g.n_time = n_time;
    g.h = 1.0 / n_space;
    g.tau = p.horizon / n_time;
    g.sigma = 1.0 - p.nu / 2.0;
    return g;
}

} // namespace stekdiff
