#include "stekdiff/caputo.hpp"

#include <cmath>
#include <stdexcept>

namespace stekdiff {

WeightCache::WeightCache(double nu, double sigma) : nu_(nu), sigma_(sigma) {
    if (!(nu > 0.0) || !(nu < 1.0))
        throw std::invalid_argument("nu must lie strictly inside (0,1)");
    if (std::abs(sigma - (1.0 - nu / 2.0)) > 1e-12)
        throw std::invalid_argument("sigma must equal 1 - nu/2");
    a_.push_back(std::pow(sigma_, 1.0 - nu_));
    b_.push_back(0.0); // b_[0] unused
}

void WeightCache::extend(int lmax) {
    const double p1 = 1.0 - nu_;
    const double p2 = 2.0 - nu_;
    for (int l = static_cast<int>(a_.size()); l <= lmax; ++l) {
        const double lo = l - 1 + sigma_;
        const double hi = l + sigma_;
        const double lo1 = std::pow(lo, p1), hi1 = std::pow(hi, p1);
        a_.push_back(hi1 - lo1);
        b_.push_back((std::pow(hi, p2) - std::pow(lo, p2)) / p2 -
                     (hi1 + lo1) / 2.0);
    }
}

WeightTable WeightCache::table(int level, double tau) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    extend(level);

    WeightTable w;
    w.level = level;
    w.scale = std::pow(tau, 1.0 - nu_) / std::tgamma(2.0 - nu_);
    w.c.resize(level + 1);
    if (level == 0) {
        w.c[0] = a_[0];
    } else {
        w.c[0] = a_[0] + b_[1];
        for (int s = 1; s < level; ++s) w.c[s] = a_[s] + b_[s + 1] - b_[s];
        w.c[level] = a_[level] - b_[level];
    }
    return w;
}

WeightTable compute_weights(double nu, double sigma, int level, double tau) {
    return WeightCache(nu, sigma).table(level, tau);
}

double caputo_apply(const SolutionHistory& history, const WeightTable& weights,
                    int node) {
    const int n = weights.level;
    if (history.levels() != n + 2)
        throw std::invalid_argument(
            "history must hold layers 0..n+1 for a level-n weight table");
    if (node < 0 || node > history.grid.n_space)
        throw std::invalid_argument("node index out of range");

    double s = 0.0;
    for (int l = 0; l <= n; ++l)
        s += weights.c[n - l] *
             (history.layers[l + 1][node] - history.layers[l][node]);
    return s * weights.scale / history.grid.tau;
}

} // namespace stekdiff
