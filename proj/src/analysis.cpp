#include "stekdiff/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "stekdiff/errors.hpp"

namespace stekdiff {

std::string to_string(StabilityCase c) {
    switch (c) {
    case StabilityCase::Direct: return "direct";
    case StabilityCase::Case1: return "case1";
    case StabilityCase::Case2: return "case2";
    case StabilityCase::NoGuarantee: return "no_guarantee";
    }
    return "no_guarantee";
}

std::pair<double, double> delta_roots(double alpha, double beta) {
    if (alpha == beta)
        throw DegenerateParameters(
            "alpha == beta: the characteristic quadratic degenerates");
    const double disc = (alpha * alpha - 1.0) * (beta * beta - 1.0);
    if (disc <= 0.0)
        throw NoRealRoots("(alpha^2-1)(beta^2-1) must be positive");

    const double q = alpha * beta - 1.0;
    const double r = std::sqrt(disc);
    // The two roots multiply to exactly 1; evaluate whichever numerator does
    // not cancel and recover the other from the product.
    double d1, d2;
    if (q >= 0.0) {
        d2 = (q + r) / (alpha - beta);
        d1 = 1.0 / d2;
    } else {
        d1 = (q - r) / (alpha - beta);
        d2 = 1.0 / d1;
    }
    return {d1, d2};
}

TransformedParams transform_params(double alpha, double beta, double gamma,
                                   double delta) {
    constexpr double kSep = 1e-9;
    if (std::abs(delta + alpha) < kSep || std::abs(delta - beta) < kSep ||
        std::abs(delta - 1.0) < kSep || std::abs(delta + 1.0) < kSep)
        throw DegenerateDelta(
            "delta collides with a pole of the transformed parameters");

    TransformedParams tp;
    tp.alpha1 = (delta * alpha + 1.0) / (delta + alpha);
    tp.beta1 = (delta * beta - 1.0) / (delta - beta);
    tp.gamma1 = gamma * (delta * delta - 1.0) /
                ((delta + alpha) * (delta - beta));
    tp.mu_factor = (delta * delta - 1.0) / (delta - beta);
    return tp;
}

StabilityVerdict classify_stability(double alpha, double beta, double gamma) {
    StabilityVerdict v;

    if (alpha == beta && alpha != 1.0 && gamma <= 0.0) {
        v.kind = StabilityCase::Direct;
        return v;
    }

    const bool in1 =
        std::abs(alpha) < 1.0 && std::abs(beta) < 1.0 && gamma <= 0.0;
    const bool in2 = std::abs(alpha) > 1.0 && std::abs(beta) > 1.0 &&
                     alpha * beta * gamma <= 0.0;
    if (!in1 && !in2) return v; // NoGuarantee

    // alpha == beta cannot reach here: inside either region it would force
    // gamma <= 0 and alpha != 1, which the direct branch already took.
    try {
        const auto [d1, d2] = delta_roots(alpha, beta);
        const double delta = in1 ? d1 : d2;
        v.transformed = transform_params(alpha, beta, gamma, delta);
        v.delta = delta;
        v.kind = in1 ? StabilityCase::Case1 : StabilityCase::Case2;
    } catch (const DegenerateDelta&) {
        v = StabilityVerdict{}; // root too close to a pole: no guarantee
    } catch (const NoRealRoots&) {
        v = StabilityVerdict{}; // only possible at region boundaries
    }
    return v;
}

GridFunction transform_field(const GridFunction& y, double delta) {
    if (y.empty()) throw std::invalid_argument("grid function is empty");
    const std::size_t n = y.size() - 1;
    GridFunction v(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        v[i] = delta * y[i] + y[n - i];
    return v;
}

std::vector<double>
convergence_order(const std::vector<std::pair<double, double>>& h_err) {
    if (h_err.size() < 2)
        throw std::invalid_argument("need at least two (h, err) pairs");
    for (std::size_t j = 0; j < h_err.size(); ++j) {
        if (!(h_err[j].first > 0.0))
            throw std::invalid_argument("mesh sizes must be positive");
        if (!(h_err[j].second > 0.0))
            throw std::invalid_argument("errors must be strictly positive");
        if (j > 0 && !(h_err[j].first < h_err[j - 1].first))
            throw std::invalid_argument("mesh sizes must strictly decrease");
    }
    std::vector<double> co;
    co.reserve(h_err.size() - 1);
    for (std::size_t j = 0; j + 1 < h_err.size(); ++j)
        co.push_back(std::log(h_err[j].second / h_err[j + 1].second) /
                     std::log(h_err[j].first / h_err[j + 1].first));
    return co;
}

} // namespace stekdiff
